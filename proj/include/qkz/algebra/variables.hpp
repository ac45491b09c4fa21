#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qkz/algebra/polynomial.hpp"

namespace qkz::algebra {

/// Names for the variables of a polynomial context.
///
/// Spectral contexts hold z_1..z_N followed by the unit variable h = hbar/2.
/// Keeping h as the stored unit makes every half-integer hbar shift an
/// integer exponent; printed output always uses hbar ("hb").
class VariableSet {
public:
  /// z1..zN, h
  static VariableSet spectral(std::size_t n);
  /// Plain named variables with no hbar unit.
  static VariableSet named(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  /// Number of z variables in a spectral context.
  std::size_t spectral_count() const;
  bool has_hbar() const { return hbar_.has_value(); }
  std::size_t hbar_index() const;

  const std::string &name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string> &names() const { return names_; }
  std::optional<std::size_t> find(const std::string &name) const;
  std::size_t index_of(const std::string &name) const;

  Polynomial var(std::size_t i) const { return Polynomial::variable(size(), i); }
  Polynomial var(const std::string &name) const { return var(index_of(name)); }
  /// z_i with 1-based index, matching the usual notation.
  Polynomial z(std::size_t i) const;
  /// hbar = 2h
  Polynomial hbar() const;
  /// c * h, i.e. an hbar shift of c/2.
  Polynomial half_hbar(const Rational &c) const;
  Polynomial constant(const Rational &c) const { return Polynomial::constant(size(), c); }

  friend bool operator==(const VariableSet &, const VariableSet &) = default;

private:
  std::vector<std::string> names_;
  std::optional<std::size_t> hbar_;
};

} // namespace qkz::algebra
