#include "qkz/combinatorics/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qkz/algebra/errors.hpp"

namespace qkz::combinatorics {

Partition conjugate(const Partition &p) {
  Partition c;
  int len = p.empty() ? 0 : *std::max_element(p.begin(), p.end());
  for (int j = 1; j <= len; ++j)
    c.push_back(int(std::count_if(p.begin(), p.end(), [j](int x) { return x >= j; })));
  return c;
}

bool dominated_by(const Partition &a, const Partition &b) {
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb)
      return false;
  }
  return sa == sb;
}

int codimension(const std::vector<int> &lambda) {
  int c = 0;
  for (int l : lambda)
    c += l * (l - 1) / 2;
  return c;
}

std::string QuiverData::fingerprint() const {
  std::ostringstream os;
  auto list = [&os](const std::vector<int> &v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      os << (i ? "," : "") << v[i];
  };
  os << "k=" << k << ";lambda=";
  list(lambda);
  os << ";m=";
  list(m);
  return os.str();
}

namespace {

void check_dominant(const std::vector<int> &lambda) {
  for (std::size_t a = 0; a + 1 < lambda.size(); ++a)
    if (lambda[a] < lambda[a + 1])
      throw PreconditionError("lambda is not dominant: row " + std::to_string(a + 1) +
                              " has " + std::to_string(lambda[a]) + " boxes, row " +
                              std::to_string(a + 2) + " has " +
                              std::to_string(lambda[a + 1]));
  if (!lambda.empty() && lambda.back() < 0)
    throw PreconditionError("lambda has a negative row");
}

std::vector<int> padded(Partition p, std::size_t n, const char *what) {
  if (p.size() > n)
    throw PreconditionError(std::string(what) + " has more than N columns");
  p.resize(n, 0);
  return p;
}

} // namespace

QuiverData weights_from_quiver(int k, const std::vector<int> &w,
                               const std::vector<int> &v,
                               const std::optional<std::vector<int>> &m_order) {
  if (k < 2)
    throw PreconditionError("k must be at least 2");
  if (w.size() != std::size_t(k - 1) || v.size() != std::size_t(k - 1))
    throw PreconditionError("w and v must have length k-1");
  for (std::size_t a = 0; a < w.size(); ++a)
    if (w[a] < 0 || v[a] < 0)
      throw PreconditionError("w and v must be non-negative");
  QuiverData q;
  q.k = k;
  q.w = w;
  q.v = v;
  q.mu.assign(std::size_t(k), 0);
  for (int j = 0; j < k - 1; ++j)
    for (int a = j; a < k - 1; ++a)
      q.mu[std::size_t(j)] += w[std::size_t(a)];
  q.lambda = q.mu;
  for (int a = 0; a < k - 1; ++a) {
    q.lambda[std::size_t(a)] -= v[std::size_t(a)];
    q.lambda[std::size_t(a) + 1] += v[std::size_t(a)];
  }
  check_dominant(q.lambda);
  for (int a = 0; a < k - 1; ++a) {
    q.N += w[std::size_t(a)];
    q.M += (a + 1) * w[std::size_t(a)];
  }
  std::vector<int> cols = conjugate(q.mu);
  if (m_order) {
    std::vector<int> a = *m_order, b = cols;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw PreconditionError("m is not a permutation of the column heights of mu");
    q.m = *m_order;
  } else {
    q.m = cols;
  }
  q.ell = padded(conjugate(q.lambda), std::size_t(q.N), "lambda");
  return q;
}

QuiverData weights_from_lambda(int k, const std::vector<int> &lambda,
                               const std::vector<int> &m) {
  if (k < 2)
    throw PreconditionError("k must be at least 2");
  if (lambda.size() > std::size_t(k))
    throw PreconditionError("lambda has more than k rows");
  QuiverData q;
  q.k = k;
  q.lambda = lambda;
  q.lambda.resize(std::size_t(k), 0);
  check_dominant(q.lambda);
  for (int mi : m)
    if (mi < 1 || mi > k)
      throw PreconditionError("entries of m must lie in 1..k");
  q.m = m;
  q.N = int(m.size());
  q.M = std::accumulate(m.begin(), m.end(), 0);
  if (std::accumulate(q.lambda.begin(), q.lambda.end(), 0) != q.M)
    throw PreconditionError("lambda and m have different sizes");
  q.w.assign(std::size_t(k - 1), 0);
  for (int mi : m)
    if (mi < k)
      ++q.w[std::size_t(mi - 1)];
  std::vector<int> sorted = m;
  std::sort(sorted.rbegin(), sorted.rend());
  q.mu = conjugate(sorted);
  q.mu.resize(std::size_t(k), 0);
  q.v.assign(std::size_t(k - 1), 0);
  int acc = 0;
  for (int a = 0; a < k - 1; ++a) {
    acc += q.mu[std::size_t(a)] - q.lambda[std::size_t(a)];
    if (acc < 0)
      throw PreconditionError("lambda is not a weight below mu");
    q.v[std::size_t(a)] = acc;
  }
  q.ell = padded(conjugate(q.lambda), std::size_t(q.N), "lambda");
  return q;
}

} // namespace qkz::combinatorics
