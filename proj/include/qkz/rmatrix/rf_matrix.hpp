#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qkz/algebra/rational_function.hpp"

namespace qkz::rmatrix {

using algebra::Polynomial;
using algebra::RationalFunction;

/// Sparse row-major matrix of rational functions over a common context.
class RFMatrix {
public:
  using Row = std::vector<std::pair<std::size_t, RationalFunction>>;

  RFMatrix() = default;
  RFMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), data_(rows) {}
  static RFMatrix identity(std::size_t n, std::size_t nvars);
  static RFMatrix from_integers(const std::vector<std::vector<int>> &m, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  const Row &row(std::size_t i) const { return data_.at(i); }

  RationalFunction get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, RationalFunction v);
  void add(std::size_t i, std::size_t j, const RationalFunction &v);
  std::size_t nonzeros() const;

  friend RFMatrix operator*(const RFMatrix &a, const RFMatrix &b);
  RFMatrix operator*(const RationalFunction &scalar) const;
  RFMatrix substitute(std::span<const std::optional<Polynomial>> images,
                      std::size_t target_nvars) const;
  RFMatrix transpose() const;

  std::vector<RationalFunction> apply(const std::vector<Polynomial> &v) const;
  std::vector<RationalFunction> apply(const std::vector<RationalFunction> &v) const;

  /// First (row, col) where the two matrices differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const RFMatrix &o) const;
  friend bool operator==(const RFMatrix &a, const RFMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && !a.first_difference(b);
  }
  bool is_identity() const;

private:
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  std::vector<Row> data_;
};

} // namespace qkz::rmatrix
