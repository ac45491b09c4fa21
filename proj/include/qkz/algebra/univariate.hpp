#pragma once

#include <utility>
#include <vector>

#include "qkz/algebra/polynomial.hpp"

namespace qkz::algebra {

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational &c) { return UPoly({c}); }
  static UPoly x() { return UPoly({0, 1}); }

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational &operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational> &coeffs() const { return c_; }
  const Rational &leading() const { return c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly &a, const UPoly &b);
  friend UPoly operator-(const UPoly &a, const UPoly &b);
  friend UPoly operator*(const UPoly &a, const UPoly &b);
  friend bool operator==(const UPoly &a, const UPoly &b) { return a.c_ == b.c_; }

  /// Quotient and remainder.
  std::pair<UPoly, UPoly> divmod(const UPoly &d) const;
  UPoly monic() const;
  Rational eval(const Rational &x) const;

  /// All distinct rational roots (the polynomial need not be squarefree).
  std::vector<Rational> rational_roots() const;

private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);

/// Element of Q(x) kept as a reduced fraction with monic denominator.
class URatFun {
public:
  URatFun() : num_(), den_(UPoly::constant(1)) {}
  URatFun(UPoly num) : num_(std::move(num)), den_(UPoly::constant(1)) {}
  URatFun(UPoly num, UPoly den);

  const UPoly &num() const { return num_; }
  const UPoly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend URatFun operator+(const URatFun &a, const URatFun &b);
  friend URatFun operator-(const URatFun &a, const URatFun &b);
  friend URatFun operator*(const URatFun &a, const URatFun &b);
  friend URatFun operator/(const URatFun &a, const URatFun &b);
  friend bool operator==(const URatFun &a, const URatFun &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  UPoly num_, den_;
};

/// Convert a polynomial in which only `var` occurs.
UPoly to_univariate(const Polynomial &p, std::size_t var);

} // namespace qkz::algebra
