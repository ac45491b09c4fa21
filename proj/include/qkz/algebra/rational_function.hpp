#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qkz/algebra/linear_form.hpp"
#include "qkz/algebra/polynomial.hpp"

namespace qkz::algebra {

/// Polynomial numerator over a multiset of linear forms.
///
/// Kept reduced: no denominator form divides the numerator. The denominator
/// is sorted, so two reduced fractions with the same value share the same
/// denominator and numerator; equality still goes through cross
/// multiplication.
class RationalFunction {
public:
  RationalFunction() = default;
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, std::vector<LinearForm> den);

  static RationalFunction constant(std::size_t nvars, const Rational &c) {
    return RationalFunction(Polynomial::constant(nvars, c));
  }
  /// num / den where den must factor into linear forms.
  static RationalFunction fraction(const Polynomial &num, const Polynomial &den);

  std::size_t nvars() const { return num_.nvars(); }
  const Polynomial &numerator() const { return num_; }
  const std::vector<LinearForm> &denominator() const { return den_; }
  Polynomial denominator_polynomial() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  /// Numerator if the denominator is empty.
  std::optional<Polynomial> as_polynomial() const;
  bool is_constant() const { return den_.empty() && num_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b);
  friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b);
  friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b);
  friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b);
  RationalFunction &operator+=(const RationalFunction &o) { return *this = *this + o; }
  RationalFunction &operator-=(const RationalFunction &o) { return *this = *this - o; }
  RationalFunction &operator*=(const RationalFunction &o) { return *this = *this * o; }
  friend bool operator==(const RationalFunction &a, const RationalFunction &b);

  /// Multiplicative inverse; the numerator must factor into linear forms.
  RationalFunction inverse() const;

  RationalFunction swap(std::size_t i, std::size_t j) const;
  /// Substitution of variables; images of denominator forms must again be
  /// linear forms or nonzero constants.
  RationalFunction substitute(std::span<const std::optional<Polynomial>> images,
                              std::size_t target_nvars) const;

private:
  void reduce();

  Polynomial num_;
  std::vector<LinearForm> den_;
};

} // namespace qkz::algebra
