#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qkz/algebra/polynomial.hpp"

namespace qkz::algebra {

/// a*hbar + z_i - z_j in a spectral context (last variable is h = hbar/2).
///
/// Stored as an integer count of h units plus 0-based indices. Canonical
/// sign: i < j; a form without z part is always plain `h` (any scalar lives
/// in the numerator of whatever holds the form).
struct LinearForm {
  int hb2 = 1;
  int i = -1;
  int j = -1;

  /// Canonical form of hb2*h + z_i - z_j together with the sign s such that
  /// the input equals s times the canonical form (pure forms report the
  /// scalar through `scale`).
  static std::pair<LinearForm, Rational> make(int hb2, int i, int j);
  static LinearForm hbar_unit() { return LinearForm{}; }

  bool is_pure() const { return i < 0; }
  /// Build the polynomial in a context with `nvars` variables.
  Polynomial to_polynomial(std::size_t nvars) const;
  /// Text such as "hb + z1 - z2" or "3/2*hb + z1 - z3".
  std::string str() const;

  friend bool operator==(const LinearForm &, const LinearForm &) = default;
  friend auto operator<=>(const LinearForm &a, const LinearForm &b) {
    return std::tie(a.i, a.j, a.hb2) <=> std::tie(b.i, b.j, b.hb2);
  }
};

/// p == scale * form
struct ScaledForm {
  Rational scale;
  LinearForm form;
};

/// Recognize a polynomial that is a rational multiple of a linear form.
std::optional<ScaledForm> as_linear_form(const Polynomial &p);

/// Raised when a polynomial is not divisible by a linear form. Carries the
/// remainder of division by the form as a polynomial in its leading variable.
class NotDivisibleError : public ConsistencyError {
public:
  NotDivisibleError(const std::string &what, Polynomial remainder)
      : ConsistencyError(what), remainder_(std::move(remainder)) {}
  const Polynomial &remainder() const { return remainder_; }

private:
  Polynomial remainder_;
};

/// Quotient q and remainder r with p = q*f + r, where r is free of the
/// leading variable of f (z_i, or h for a pure form).
std::pair<Polynomial, Polynomial> divide_by_form(const Polynomial &p,
                                                 const LinearForm &f);
std::optional<Polynomial> try_divide(const Polynomial &p, const LinearForm &f);
/// Exact division; throws NotDivisibleError otherwise.
Polynomial exact_divide(const Polynomial &p, const LinearForm &f);

/// Write p as c * product of linear forms, if possible.
struct LinearFactorization {
  Rational constant;
  std::vector<LinearForm> forms;
};
std::optional<LinearFactorization> factor_linear(const Polynomial &p);

} // namespace qkz::algebra
