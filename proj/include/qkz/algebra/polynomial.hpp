#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "qkz/algebra/errors.hpp"

namespace qkz::algebra {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector with cached total degree.
///
/// Ordering is graded lexicographic with variable 0 the largest, which is the
/// canonical order for every polynomial in the library.
class Monomial {
public:
  using Exponents = boost::container::small_vector<std::uint8_t, 24>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(Exponents exps);

  std::size_t size() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const Exponents &exponents() const { return exps_; }

  void set(std::size_t i, unsigned e);
  Monomial operator*(const Monomial &other) const;
  bool divides(const Monomial &other) const;

  friend bool operator==(const Monomial &a, const Monomial &b) {
    return a.exps_ == b.exps_;
  }
  /// Graded lex; `a > b` means a comes first in canonical order.
  friend std::strong_ordering operator<=>(const Monomial &a,
                                          const Monomial &b);

private:
  Exponents exps_;
  unsigned degree_ = 0;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept sorted in decreasing graded-lex order with no zero
/// coefficient stored. The number of variables is fixed at construction; the
/// meaning of each variable is carried by a VariableSet held elsewhere.
class Polynomial {
public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational &c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  /// Homogeneity with respect to a weighted grading.
  bool is_homogeneous(std::span<const int> weights) const;

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator-=(const Polynomial &other);
  Polynomial &operator*=(const Polynomial &other);
  Polynomial &operator*=(const Rational &c);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
  friend Polynomial operator*(const Rational &c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial &a, const Polynomial &b);

  Polynomial pow(unsigned e) const;

  /// Exchange variables i and j.
  Polynomial swap(std::size_t i, std::size_t j) const;

  /// Substitute each variable v by `images[v]` (absent = keep v, which then
  /// requires the target context to have the same size). All images must live
  /// in a common target context of `target_nvars` variables.
  Polynomial substitute(std::span<const std::optional<Polynomial>> images,
                        std::size_t target_nvars) const;
  Polynomial substitute(const std::map<std::size_t, Polynomial> &images) const;

  /// Coefficient of var^d viewed as a polynomial in the remaining variables.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  /// Leading coefficient times monomial, in canonical order.
  const Term &leading_term() const;

  /// Scale so that all coefficients are integers with gcd 1 and leading
  /// coefficient positive. Returns the factor applied.
  Rational make_primitive();

  std::size_t hash() const;

private:
  void normalize();

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

void require_same_context(const Polynomial &a, const Polynomial &b);

} // namespace qkz::algebra
