#pragma once

#include <string_view>
#include <variant>

#include "qkz/slice/slice.hpp"

namespace qkz::slice {

/// Value of a matrix expression: a scalar polynomial or an N x N matrix.
using ExprValue = std::variant<Polynomial, PolyMatrix>;

/// Parse matrix expressions over a slice model.
///
/// Symbols: A and B (column 2 and column 1 coordinates, when every m_i = 2),
/// X (the generic slice matrix), scalars t_a and e_a, integers. Juxtaposition
/// multiplies, `^n` is a power, `M_{i,j}` or `(expr)_{i,j}` an entry (1-based).
/// A scalar added to a matrix stands for the scalar times the identity.
ExprValue parse_matrix_expression(std::string_view text, const SliceModel &model);

/// Scalar expression; throws PreconditionError if the value is a matrix.
Polynomial parse_scalar_expression(std::string_view text, const SliceModel &model);
PolyMatrix parse_matrix(std::string_view text, const SliceModel &model);

} // namespace qkz::slice
