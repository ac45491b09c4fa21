#include "qkz/algebra/variables.hpp"

#include <algorithm>

namespace qkz::algebra {

VariableSet VariableSet::spectral(std::size_t n) {
  VariableSet vs;
  for (std::size_t i = 1; i <= n; ++i)
    vs.names_.push_back("z" + std::to_string(i));
  vs.names_.push_back("h");
  vs.hbar_ = n;
  return vs;
}

VariableSet VariableSet::named(std::vector<std::string> names) {
  VariableSet vs;
  vs.names_ = std::move(names);
  return vs;
}

std::size_t VariableSet::spectral_count() const {
  if (!hbar_)
    throw ContextError("not a spectral context");
  return *hbar_;
}

std::size_t VariableSet::hbar_index() const {
  if (!hbar_)
    throw ContextError("context has no hbar variable");
  return *hbar_;
}

std::optional<std::size_t> VariableSet::find(const std::string &name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return std::size_t(it - names_.begin());
}

std::size_t VariableSet::index_of(const std::string &name) const {
  auto idx = find(name);
  if (!idx)
    throw ContextError("unknown variable '" + name + "'");
  return *idx;
}

Polynomial VariableSet::z(std::size_t i) const {
  if (i == 0 || i > spectral_count())
    throw ContextError("z index out of range");
  return var(i - 1);
}

Polynomial VariableSet::hbar() const { return var(hbar_index()) * Rational(2); }

Polynomial VariableSet::half_hbar(const Rational &c) const {
  return var(hbar_index()) * c;
}

} // namespace qkz::algebra
