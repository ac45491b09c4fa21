#include "qkz/combinatorics/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "qkz/algebra/errors.hpp"

namespace qkz::combinatorics {

using algebra::QMatrix;

Partition Tableau::shape() const {
  Partition p;
  for (const auto &r : rows_)
    p.push_back(int(r.size()));
  return p;
}

Partition Tableau::shape_upto(int h) const {
  Partition p;
  for (const auto &r : rows_)
    p.push_back(int(std::count_if(r.begin(), r.end(), [h](int x) { return x <= h; })));
  return p;
}

std::vector<int> Tableau::rows_of(int letter) const {
  std::vector<int> out;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (std::find(rows_[r].begin(), rows_[r].end(), letter) != rows_[r].end())
      out.push_back(int(r) + 1);
  return out;
}

void Tableau::validate(const std::vector<int> &lambda, const std::vector<int> &m) const {
  Partition s = shape();
  Partition l = lambda;
  l.resize(std::max(l.size(), s.size()), 0);
  s.resize(l.size(), 0);
  if (s != l)
    throw PreconditionError("tableau shape differs from lambda");
  std::vector<int> count(m.size() + 1, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      int x = rows_[r][c];
      if (x < 1 || std::size_t(x) > m.size())
        throw PreconditionError("tableau letter out of range");
      ++count[std::size_t(x)];
      if (c > 0 && rows_[r][c - 1] >= x)
        throw PreconditionError("tableau row not strictly increasing");
      if (r > 0 && rows_[r - 1][c] > x)
        throw PreconditionError("tableau column not weakly increasing");
    }
  for (std::size_t i = 0; i < m.size(); ++i)
    if (count[i + 1] != m[i])
      throw PreconditionError("letter " + std::to_string(i + 1) + " used the wrong number of times");
}

std::string Tableau::str() const {
  std::ostringstream os;
  for (const auto &r : rows_) {
    os << "(";
    for (int x : r)
      os << x;
    os << ")";
  }
  return os.str();
}

namespace {

// Lexicographic combinations of `size` elements from 0..n-1.
void for_each_subset(int n, int size, const std::function<void(const std::vector<int> &)> &f) {
  std::vector<int> s;
  std::function<void(int)> rec = [&](int start) {
    if (int(s.size()) == size) {
      f(s);
      return;
    }
    for (int x = start; x <= n - (size - int(s.size())); ++x) {
      s.push_back(x);
      rec(x + 1);
      s.pop_back();
    }
  };
  rec(0);
}

// Rows that may receive letter-cells simultaneously: vertical strip inside lambda.
bool strip_fits(const std::vector<int> &len, const std::vector<int> &lambda,
                const std::vector<int> &rows) {
  std::vector<int> after = len;
  for (int r : rows)
    ++after[std::size_t(r)];
  for (int r : rows) {
    if (after[std::size_t(r)] > lambda[std::size_t(r)])
      return false;
    if (r > 0 && after[std::size_t(r) - 1] < after[std::size_t(r)])
      return false;
  }
  return true;
}

} // namespace

std::vector<Tableau> enumerate_tableaux(const std::vector<int> &lambda,
                                        const std::vector<int> &m) {
  int total = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (total != std::accumulate(m.begin(), m.end(), 0))
    throw PreconditionError("lambda and m have different sizes");
  int k = int(lambda.size());
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k));
  std::vector<int> len(std::size_t(k), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m.size()) {
      out.emplace_back(rows);
      return;
    }
    if (m[i] > k)
      return;
    for_each_subset(k, m[i], [&](const std::vector<int> &s) {
      if (!strip_fits(len, lambda, s))
        return;
      for (int r : s) {
        rows[std::size_t(r)].push_back(int(i) + 1);
        ++len[std::size_t(r)];
      }
      rec(i + 1);
      for (int r : s) {
        rows[std::size_t(r)].pop_back();
        --len[std::size_t(r)];
      }
    });
  };
  rec(0);
  return out;
}

std::int64_t pieri_multiplicity(int k, const std::vector<int> &lambda,
                                const std::vector<int> &m) {
  std::vector<int> target = lambda;
  target.resize(std::size_t(k), 0);
  std::map<std::vector<int>, std::int64_t> states{{std::vector<int>(std::size_t(k), 0), 1}};
  for (int mi : m) {
    std::map<std::vector<int>, std::int64_t> next;
    if (mi <= k)
      for (const auto &[nu, count] : states)
        for_each_subset(k, mi, [&](const std::vector<int> &s) {
          std::vector<int> mu = nu;
          for (int r : s)
            ++mu[std::size_t(r)];
          for (int r = 0; r < k; ++r) {
            if (mu[std::size_t(r)] > target[std::size_t(r)])
              return;
            if (r > 0 && mu[std::size_t(r)] > mu[std::size_t(r) - 1])
              return;
          }
          next[mu] += count;
        });
    states = std::move(next);
  }
  auto it = states.find(target);
  return it == states.end() ? 0 : it->second;
}

std::int64_t multiplicity_check(const QuiverData &q) {
  std::int64_t pieri = pieri_multiplicity(q.k, q.lambda, q.m);
  std::int64_t count = std::int64_t(enumerate_tableaux(q.lambda, q.m).size());
  if (pieri != count)
    throw ConsistencyError("multiplicity " + std::to_string(pieri) +
                           " differs from tableau count " + std::to_string(count) +
                           " for " + q.fingerprint());
  return count;
}

SubsetSequence phi_map(const Tableau &t) {
  int n = 0;
  for (const auto &r : t.rows())
    for (int x : r)
      n = std::max(n, x);
  SubsetSequence s(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (int x : t.rows()[r])
      s[std::size_t(x) - 1].push_back(int(r) + 1);
  return s;
}

std::vector<SubsetSequence> enumerate_subset_sequences(const std::vector<int> &lambda,
                                                       const std::vector<int> &m) {
  int k = int(lambda.size());
  std::vector<SubsetSequence> out;
  SubsetSequence cur;
  std::vector<int> left = lambda;
  int total_left = std::accumulate(m.begin(), m.end(), 0);
  if (total_left != std::accumulate(lambda.begin(), lambda.end(), 0))
    return out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m.size()) {
      out.push_back(cur);
      return;
    }
    if (m[i] > k)
      return;
    for_each_subset(k, m[i], [&](const std::vector<int> &s) {
      for (int a : s)
        if (left[std::size_t(a)] == 0)
          return;
      std::vector<int> sub;
      for (int a : s) {
        --left[std::size_t(a)];
        sub.push_back(a + 1);
      }
      cur.push_back(sub);
      rec(i + 1);
      cur.pop_back();
      for (int a : s)
        ++left[std::size_t(a)];
    });
  };
  rec(0);
  return out;
}

std::string to_string(const SubsetSequence &s) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    os << (i ? "," : "") << "{";
    for (std::size_t j = 0; j < s[i].size(); ++j)
      os << (j ? "," : "") << s[i][j];
    os << "}";
  }
  os << ")";
  return os.str();
}

Tableau promotion(const Tableau &t, int N) {
  const auto &rows = t.rows();
  if (rows.empty())
    return t;
  std::size_t k = rows.size(), c = rows[0].size();
  for (const auto &r : rows)
    if (r.size() != c)
      throw PreconditionError("promotion is only defined here for rectangular shapes");
  // transpose: s[j][r] = t[r][j] is semistandard (rows weak, columns strict)
  std::vector<std::vector<int>> s(c, std::vector<int>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < c; ++j)
      s[j][r] = rows[r][j];
  const int hole = 0;
  std::vector<std::size_t> holes;
  for (std::size_t r = 0; r < k && c > 0; ++r)
    if (s[0][r] == 1) {
      s[0][r] = hole;
      holes.push_back(r);
    }
  for (auto it = holes.rbegin(); it != holes.rend(); ++it) {
    std::size_t a = 0, b = *it;
    for (;;) {
      bool has_right = b + 1 < k, has_below = a + 1 < c;
      if (!has_right && !has_below)
        break;
      bool take_below;
      if (!has_right)
        take_below = true;
      else if (!has_below)
        take_below = false;
      else
        take_below = s[a + 1][b] <= s[a][b + 1];
      if (take_below) {
        s[a][b] = s[a + 1][b];
        ++a;
      } else {
        s[a][b] = s[a][b + 1];
        ++b;
      }
      s[a][b] = hole;
    }
    s[a][b] = N + 1;
  }
  std::vector<std::vector<int>> out(k, std::vector<int>(c));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < c; ++j)
      out[r][j] = s[j][r] - 1;
  return Tableau(std::move(out));
}

int rho_epsilon(int M, int k) {
  if (M % k != 0)
    throw PreconditionError("rho requires M divisible by k");
  return (M / k - 1) % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<int>> rho_matrix(const std::vector<Tableau> &source,
                                         const std::vector<Tableau> &target,
                                         int m1, int M, int k) {
  int eps = rho_epsilon(M, k);
  int sign = (m1 % 2 == 0) ? 1 : eps;
  int N = 0;
  for (const auto &t : source)
    for (const auto &r : t.rows())
      for (int x : r)
        N = std::max(N, x);
  std::vector<std::vector<int>> rho(target.size(), std::vector<int>(source.size(), 0));
  for (std::size_t b = 0; b < source.size(); ++b) {
    Tableau p = promotion(source[b], N);
    auto it = std::find(target.begin(), target.end(), p);
    if (it == target.end())
      throw ConsistencyError("promotion of " + source[b].str() + " is not in the target basis");
    rho[std::size_t(it - target.begin())][b] = sign;
  }
  return rho;
}

Partition jordan_type(const QMatrix &X) {
  std::size_t n = X.size();
  std::vector<std::size_t> ranks{n};
  QMatrix power = X;
  while (ranks.back() > 0) {
    if (ranks.size() > n)
      throw PreconditionError("matrix is not nilpotent");
    std::size_t r = algebra::rank(power);
    if (r == ranks.back() && r > 0)
      throw PreconditionError("matrix is not nilpotent");
    ranks.push_back(r);
    power = algebra::multiply(power, X);
  }
  // blocks of size >= j: ranks[j-1] - ranks[j]
  Partition ge;
  for (std::size_t j = 1; j < ranks.size(); ++j)
    ge.push_back(int(ranks[j - 1] - ranks[j]));
  return conjugate(ge);
}

Tableau spaltenstein_label(const QMatrix &X, const std::vector<int> &m) {
  std::size_t M = std::size_t(std::accumulate(m.begin(), m.end(), 0));
  if (X.size() != M)
    throw PreconditionError("matrix size differs from sum of m");
  std::vector<std::vector<int>> rows;
  Partition prev;
  std::size_t s = 0;
  for (std::size_t h = 0; h < m.size(); ++h) {
    s += std::size_t(m[h]);
    Partition shape = conjugate(jordan_type(algebra::leading_submatrix(X, s)));
    if (shape.size() > rows.size())
      rows.resize(shape.size());
    prev.resize(shape.size(), 0);
    for (std::size_t r = 0; r < shape.size(); ++r) {
      int add = shape[r] - prev[r];
      if (add < 0 || add > 1)
        throw ConsistencyError("Jordan types do not form a vertical-strip chain");
      if (add == 1)
        rows[r].push_back(int(h) + 1);
    }
    prev = shape;
  }
  return Tableau(std::move(rows));
}

bool tableau_dominated_by(const Tableau &a, const Tableau &b, int N) {
  for (int h = 1; h <= N; ++h)
    if (!dominated_by(conjugate(a.shape_upto(h)), conjugate(b.shape_upto(h))))
      return false;
  return true;
}

} // namespace qkz::combinatorics
