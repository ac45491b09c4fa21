#include "qkz/algebra/qmatrix.hpp"

namespace qkz::algebra {

QMatrix qmatrix_zero(std::size_t rows, std::size_t cols) {
  return QMatrix(rows, std::vector<Rational>(cols));
}

QMatrix qmatrix_identity(std::size_t n) {
  QMatrix m = qmatrix_zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

QMatrix multiply(const QMatrix &a, const QMatrix &b) {
  std::size_t inner = b.size();
  std::size_t cols = inner ? b[0].size() : 0;
  QMatrix c = qmatrix_zero(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner)
      throw PreconditionError("matrix dimensions do not match");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0)
        continue;
      for (std::size_t j = 0; j < cols; ++j)
        c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

QMatrix leading_submatrix(const QMatrix &a, std::size_t n) {
  QMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    s[i].assign(a.at(i).begin(), a.at(i).begin() + long(n));
  return s;
}

std::size_t rank(const QMatrix &a) {
  if (a.empty())
    return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (const auto &x : a[i])
      l = lcm(l, x.get_den());
    for (std::size_t j = 0; j < cols; ++j)
      m[i][j] = Integer(a[i][j] * l);
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

} // namespace qkz::algebra
