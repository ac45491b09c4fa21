#include "qkz/rmatrix/rf_matrix.hpp"

#include <algorithm>
#include <map>

namespace qkz::rmatrix {

RFMatrix RFMatrix::identity(std::size_t n, std::size_t nvars) {
  RFMatrix m(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i)
    m.data_[i].emplace_back(i, RationalFunction::constant(nvars, 1));
  return m;
}

RFMatrix RFMatrix::from_integers(const std::vector<std::vector<int>> &m,
                                 std::size_t nvars) {
  RFMatrix out(m.size(), m.empty() ? 0 : m[0].size(), nvars);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != 0)
        out.data_[i].emplace_back(j, RationalFunction::constant(nvars, m[i][j]));
  return out;
}

RationalFunction RFMatrix::get(std::size_t i, std::size_t j) const {
  const Row &r = data_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto &e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j)
    return it->second;
  return RationalFunction::constant(nvars_, 0);
}

void RFMatrix::set(std::size_t i, std::size_t j, RationalFunction v) {
  if (j >= cols_)
    throw PreconditionError("matrix column out of range");
  Row &r = data_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto &e, std::size_t c) { return e.first < c; });
  bool present = it != r.end() && it->first == j;
  if (v.is_zero()) {
    if (present)
      r.erase(it);
  } else if (present) {
    it->second = std::move(v);
  } else {
    r.insert(it, {j, std::move(v)});
  }
}

void RFMatrix::add(std::size_t i, std::size_t j, const RationalFunction &v) {
  if (v.is_zero())
    return;
  set(i, j, get(i, j) + v);
}

std::size_t RFMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto &r : data_)
    n += r.size();
  return n;
}

RFMatrix operator*(const RFMatrix &a, const RFMatrix &b) {
  if (a.cols_ != b.rows_)
    throw PreconditionError("matrix dimensions do not match");
  if (a.nvars_ != b.nvars_)
    throw ContextError("matrices over different contexts");
  RFMatrix c(a.rows_, b.cols_, a.nvars_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::map<std::size_t, RationalFunction> acc;
    for (const auto &[k, x] : a.data_[i])
      for (const auto &[j, y] : b.data_[k]) {
        auto it = acc.find(j);
        if (it == acc.end())
          acc.emplace(j, x * y);
        else
          it->second += x * y;
      }
    for (auto &[j, v] : acc)
      if (!v.is_zero())
        c.data_[i].emplace_back(j, std::move(v));
  }
  return c;
}

RFMatrix RFMatrix::operator*(const RationalFunction &scalar) const {
  RFMatrix c(rows_, cols_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto &[j, v] : data_[i]) {
      auto p = v * scalar;
      if (!p.is_zero())
        c.data_[i].emplace_back(j, std::move(p));
    }
  return c;
}

RFMatrix RFMatrix::substitute(std::span<const std::optional<Polynomial>> images,
                              std::size_t target_nvars) const {
  RFMatrix c(rows_, cols_, target_nvars);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto &[j, v] : data_[i]) {
      auto s = v.substitute(images, target_nvars);
      if (!s.is_zero())
        c.data_[i].emplace_back(j, std::move(s));
    }
  return c;
}

RFMatrix RFMatrix::transpose() const {
  RFMatrix t(cols_, rows_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto &[j, v] : data_[i])
      t.data_[j].emplace_back(i, v);
  return t;
}

std::vector<RationalFunction> RFMatrix::apply(const std::vector<Polynomial> &v) const {
  std::vector<RationalFunction> w;
  w.reserve(v.size());
  for (const auto &p : v)
    w.emplace_back(p);
  return apply(w);
}

std::vector<RationalFunction>
RFMatrix::apply(const std::vector<RationalFunction> &v) const {
  if (v.size() != cols_)
    throw PreconditionError("vector length does not match matrix");
  std::vector<RationalFunction> out(rows_, RationalFunction::constant(nvars_, 0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto &[j, x] : data_[i])
      if (!v[j].is_zero())
        out[i] += x * v[j];
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>>
RFMatrix::first_difference(const RFMatrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    return std::pair<std::size_t, std::size_t>{0, 0};
  for (std::size_t i = 0; i < rows_; ++i) {
    std::map<std::size_t, int> cols;
    for (const auto &e : data_[i])
      cols[e.first] = 1;
    for (const auto &e : o.data_[i])
      cols[e.first] = 1;
    for (const auto &[j, _] : cols)
      if (!(get(i, j) == o.get(i, j)))
        return std::pair{i, j};
  }
  return std::nullopt;
}

bool RFMatrix::is_identity() const {
  return rows_ == cols_ && *this == identity(rows_, nvars_);
}

} // namespace qkz::rmatrix
