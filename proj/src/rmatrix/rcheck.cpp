#include "qkz/rmatrix/rcheck.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "qkz/algebra/io.hpp"

namespace qkz::rmatrix {

using algebra::VariableSet;

const VariableSet &spectral_context() {
  static const VariableSet vs = VariableSet::spectral(2);
  return vs;
}

Polynomial spectral_arg(int c) {
  const auto &vs = spectral_context();
  return vs.z(1) - vs.z(2) + vs.half_hbar(c);
}

std::vector<Subset> subsets(int k, int size) {
  std::vector<Subset> out;
  Subset cur;
  std::function<void(int)> rec = [&](int start) {
    if (int(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x <= k; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

namespace {

std::vector<SubsetPair> pairs(int k, int a, int b) {
  std::vector<SubsetPair> out;
  for (const auto &s : subsets(k, a))
    for (const auto &t : subsets(k, b))
      out.emplace_back(s, t);
  return out;
}

std::string subset_str(const Subset &s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<int> content(const SubsetPair &p) {
  std::vector<int> c(p.first.begin(), p.first.end());
  c.insert(c.end(), p.second.begin(), p.second.end());
  std::sort(c.begin(), c.end());
  return c;
}

// (num_c * h + num_z * z) / (den_c * h + z) in the spectral context.
RationalFunction ratio(int num_c, int num_z, int den_c) {
  const auto &vs = spectral_context();
  Polynomial z = vs.z(1) - vs.z(2);
  return RationalFunction::fraction(vs.half_hbar(num_c) + z * algebra::Rational(num_z),
                                    vs.half_hbar(den_c) + z);
}

} // namespace

std::size_t ROperator::source_index(const SubsetPair &p) const {
  auto it = std::lower_bound(source.begin(), source.end(), p);
  if (it == source.end() || *it != p)
    throw PreconditionError("label not in the source basis");
  return std::size_t(it - source.begin());
}

std::size_t ROperator::target_index(const SubsetPair &p) const {
  auto it = std::lower_bound(target.begin(), target.end(), p);
  if (it == target.end() || *it != p)
    throw PreconditionError("label not in the target basis");
  return std::size_t(it - target.begin());
}

std::string ROperator::str() const {
  std::ostringstream os;
  const auto &vs = spectral_context();
  for (std::size_t i = 0; i < target.size(); ++i)
    for (const auto &[j, v] : matrix.row(i))
      os << subset_str(target[i].first) << subset_str(target[i].second) << " <- "
         << subset_str(source[j].first) << subset_str(source[j].second) << ": "
         << algebra::to_text(v, vs) << "\n";
  return os.str();
}

bool ROperator::weight_preserving() const {
  for (std::size_t i = 0; i < target.size(); ++i)
    for (const auto &e : matrix.row(i))
      if (content(target[i]) != content(source[e.first]))
        return false;
  return true;
}

ROperator fundamental_rcheck(int k) {
  if (k < 2)
    throw PreconditionError("k must be at least 2");
  ROperator r;
  r.k = k;
  r.a = r.b = 1;
  r.source = r.target = pairs(k, 1, 1);
  const std::size_t n = spectral_context().size();
  r.matrix = RFMatrix(r.target.size(), r.source.size(), n);
  RationalFunction diag_equal = ratio(2, -1, 2); // (hbar - z)/(hbar + z)
  RationalFunction keep = ratio(2, 0, 2);        // hbar/(hbar + z)
  RationalFunction swapped = ratio(0, -1, 2);    // -z/(hbar + z)
  for (std::size_t j = 0; j < r.source.size(); ++j) {
    const auto &[s, t] = r.source[j];
    if (s == t) {
      r.matrix.set(r.target_index({t, s}), j, diag_equal);
    } else {
      r.matrix.set(r.target_index({s, t}), j, keep);
      r.matrix.set(r.target_index({t, s}), j, swapped);
    }
  }
  return r;
}

RationalFunction normalization_factor(int mi, int mj) {
  if (mi < 1 || mj < 1)
    throw PreconditionError("normalization factor needs positive sizes");
  RationalFunction f = RationalFunction::constant(spectral_context().size(), 1);
  for (int a = 1; a <= std::min(mi, mj); ++a)
    f *= ratio(2 * a, -1, 2 * a);
  return f;
}

namespace {

using Word = std::vector<int>;
using Vec = std::map<Word, RationalFunction>;

int perm_sign(std::vector<int> w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j])
        sign = -sign;
  return sign;
}

void add_to(Vec &v, const Word &w, const RationalFunction &x) {
  auto it = v.find(w);
  if (it == v.end()) {
    if (!x.is_zero())
      v.emplace(w, x);
    return;
  }
  it->second += x;
  if (it->second.is_zero())
    v.erase(it);
}

// Embedding of (S, T): signed sum over orderings of each subset.
Vec embed(const SubsetPair &p) {
  Vec v;
  Word s = p.first, t = p.second;
  const std::size_t n = spectral_context().size();
  do {
    Word tt = t;
    do {
      Word w = s;
      w.insert(w.end(), tt.begin(), tt.end());
      add_to(v, w, RationalFunction::constant(n, perm_sign(s) * perm_sign(tt)));
    } while (std::next_permutation(tt.begin(), tt.end()));
  } while (std::next_permutation(s.begin(), s.end()));
  return v;
}

ROperator build_fused(int k, int a, int b) {
  if (k < 2 || a < 1 || b < 1 || a > k || b > k)
    throw PreconditionError("fused R-matrix needs 1 <= a, b <= k");
  // steps: (left position, argument shift in h units)
  std::vector<std::pair<std::size_t, int>> steps;
  for (int q = 1; q <= b; ++q)
    for (int p = a; p >= 1; --p)
      steps.emplace_back(std::size_t(q + p - 2), 2 * (p - q) + b - a);
  std::map<int, std::array<RationalFunction, 3>> coeffs;
  for (const auto &[pos, c] : steps)
    if (!coeffs.count(c))
      coeffs[c] = {ratio(2 - c, -1, 2 + c), ratio(2, 0, 2 + c), ratio(-c, -1, 2 + c)};

  ROperator r;
  r.k = k;
  r.a = a;
  r.b = b;
  r.source = pairs(k, a, b);
  r.target = pairs(k, b, a);
  const std::size_t n = spectral_context().size();
  r.matrix = RFMatrix(r.target.size(), r.source.size(), n);
  for (std::size_t j = 0; j < r.source.size(); ++j) {
    Vec v = embed(r.source[j]);
    for (const auto &[pos, c] : steps) {
      const auto &[equal, keep, swapped] = coeffs.at(c);
      Vec out;
      for (const auto &[w, x] : v) {
        if (w[pos] == w[pos + 1]) {
          add_to(out, w, x * equal);
        } else {
          add_to(out, w, x * keep);
          Word sw = w;
          std::swap(sw[pos], sw[pos + 1]);
          add_to(out, sw, x * swapped);
        }
      }
      v = std::move(out);
    }
    // project onto wedge vectors of Lambda^b (x) Lambda^a
    for (std::size_t i = 0; i < r.target.size(); ++i) {
      Word w = r.target[i].first;
      w.insert(w.end(), r.target[i].second.begin(), r.target[i].second.end());
      if (auto it = v.find(w); it != v.end())
        r.matrix.set(i, j, it->second);
    }
    for (const auto &[w, x] : v) {
      Word first(w.begin(), w.begin() + b), second(w.begin() + b, w.end());
      int sign = perm_sign(first) * perm_sign(second);
      std::sort(first.begin(), first.end());
      std::sort(second.begin(), second.end());
      if (std::adjacent_find(first.begin(), first.end()) != first.end() ||
          std::adjacent_find(second.begin(), second.end()) != second.end())
        throw ConsistencyError("fused image leaves the wedge subspace");
      RationalFunction expected = r.matrix.get(r.target_index({first, second}), j);
      if (!(x == expected * RationalFunction::constant(n, sign)))
        throw ConsistencyError("fused image is not antisymmetric within blocks");
    }
  }
  Subset low_a, low_b;
  for (int x = 1; x <= a; ++x)
    low_a.push_back(x);
  for (int x = 1; x <= b; ++x)
    low_b.push_back(x);
  RationalFunction hw = r.matrix.get(r.target_index({low_b, low_a}), r.source_index({low_a, low_b}));
  if (!(hw == fused_eigenvalue(a, b)))
    throw ConsistencyError("fused operator has an unexpected highest-weight eigenvalue");
  return r;
}

} // namespace

ROperator fused_rcheck(int k, int a, int b) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, ROperator> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(k, a, b);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_fused(k, a, b)).first;
  return it->second;
}

RationalFunction fused_eigenvalue(int a, int b) {
  const int lo = std::min(a, b), gap = std::abs(a - b);
  RationalFunction f = RationalFunction::constant(spectral_context().size(), 1);
  for (int j = 1; j <= lo; ++j)
    f *= ratio(gap + 2 * j, -1, gap + 2 * j);
  return (lo * gap) % 2 ? -f : f;
}

} // namespace qkz::rmatrix
