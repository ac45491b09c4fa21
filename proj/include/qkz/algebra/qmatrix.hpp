#pragma once

#include <vector>

#include "qkz/algebra/polynomial.hpp"

namespace qkz::algebra {

/// Dense matrix over Q, row-major.
using QMatrix = std::vector<std::vector<Rational>>;

QMatrix qmatrix_zero(std::size_t rows, std::size_t cols);
QMatrix qmatrix_identity(std::size_t n);
QMatrix multiply(const QMatrix &a, const QMatrix &b);
QMatrix leading_submatrix(const QMatrix &a, std::size_t n);
/// Rank by fraction-free (Bareiss) elimination on a row-scaled integer copy.
std::size_t rank(const QMatrix &a);

} // namespace qkz::algebra
