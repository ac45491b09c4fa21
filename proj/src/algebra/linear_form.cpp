#include "qkz/algebra/linear_form.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qkz/algebra/univariate.hpp"

namespace qkz::algebra {

std::pair<LinearForm, Rational> LinearForm::make(int hb2, int i, int j) {
  if (i < 0 && j < 0) {
    if (hb2 == 0)
      throw PreconditionError("zero linear form");
    return {LinearForm{1, -1, -1}, Rational(hb2)};
  }
  if (i < 0 || j < 0 || i == j)
    throw PreconditionError("linear form needs two distinct z indices");
  if (i < j)
    return {LinearForm{hb2, i, j}, Rational(1)};
  return {LinearForm{-hb2, j, i}, Rational(-1)};
}

Polynomial LinearForm::to_polynomial(std::size_t nvars) const {
  Polynomial p = Polynomial::variable(nvars, nvars - 1) * Rational(hb2);
  if (!is_pure()) {
    if (std::size_t(j) + 1 >= nvars)
      throw ContextError("linear form index outside context");
    p += Polynomial::variable(nvars, std::size_t(i));
    p -= Polynomial::variable(nvars, std::size_t(j));
  }
  return p;
}

std::string LinearForm::str() const {
  std::ostringstream os;
  auto hb = [&] {
    Rational a(hb2, 2);
    a.canonicalize();
    if (a == 1)
      os << "hb";
    else if (a == -1)
      os << "-hb";
    else
      os << a.get_str() << "*hb";
  };
  if (is_pure()) {
    hb();
    return os.str();
  }
  if (hb2 != 0) {
    hb();
    os << " + ";
  }
  os << "z" << i + 1 << " - z" << j + 1;
  return os.str();
}

std::optional<ScaledForm> as_linear_form(const Polynomial &p) {
  if (p.is_zero() || p.nvars() == 0)
    return std::nullopt;
  std::size_t hv = p.nvars() - 1;
  Rational ch = 0;
  std::vector<std::pair<std::size_t, Rational>> zs;
  for (const auto &t : p.terms()) {
    if (t.mono.degree() != 1)
      return std::nullopt;
    std::size_t v = 0;
    while (t.mono[v] == 0)
      ++v;
    if (v == hv)
      ch = t.coeff;
    else
      zs.emplace_back(v, t.coeff);
  }
  if (zs.empty())
    return ScaledForm{ch, LinearForm{}};
  if (zs.size() != 2)
    return std::nullopt;
  std::sort(zs.begin(), zs.end());
  const Rational &alpha = zs[0].second;
  if (zs[1].second != -alpha)
    return std::nullopt;
  Rational shift = ch / alpha;
  if (shift.get_den() != 1 || !shift.get_num().fits_sint_p())
    return std::nullopt;
  LinearForm f{int(shift.get_num().get_si()), int(zs[0].first), int(zs[1].first)};
  return ScaledForm{alpha, f};
}

std::pair<Polynomial, Polynomial> divide_by_form(const Polynomial &p,
                                                 const LinearForm &f) {
  std::size_t n = p.nvars();
  if (n == 0)
    throw ContextError("division by a linear form in an empty context");
  std::size_t hv = n - 1;
  if (f.is_pure()) {
    // quotient collects the terms with positive h degree
    std::vector<Polynomial::Term> q, r;
    for (const auto &t : p.terms()) {
      if (t.mono[hv] > 0) {
        Monomial m = t.mono;
        m.set(hv, t.mono[hv] - 1);
        q.push_back({std::move(m), t.coeff / f.hb2});
      } else {
        r.push_back(t);
      }
    }
    return {Polynomial::from_terms(n, std::move(q)),
            Polynomial::from_terms(n, std::move(r))};
  }
  if (std::size_t(f.j) >= hv)
    throw ContextError("linear form index outside context");
  std::size_t v = std::size_t(f.i);
  // root: z_i = z_j - hb2*h
  Polynomial root = Polynomial::variable(n, std::size_t(f.j)) -
                    Polynomial::variable(n, hv) * Rational(f.hb2);
  auto c = p.coefficients_in(v);
  if (c.size() <= 1)
    return {Polynomial(n), p};
  std::size_t deg = c.size() - 1;
  std::vector<Polynomial> q(deg);
  q[deg - 1] = c[deg];
  for (std::size_t d = deg - 1; d >= 1; --d)
    q[d - 1] = c[d] + root * q[d];
  Polynomial rem = c[0] + root * q[0];
  Polynomial quotient(n);
  Polynomial zi = Polynomial::variable(n, v);
  Polynomial power = Polynomial::constant(n, 1);
  for (std::size_t d = 0; d < deg; ++d) {
    quotient += q[d] * power;
    power *= zi;
  }
  return {std::move(quotient), std::move(rem)};
}

std::optional<Polynomial> try_divide(const Polynomial &p, const LinearForm &f) {
  auto [q, r] = divide_by_form(p, f);
  if (!r.is_zero())
    return std::nullopt;
  return q;
}

Polynomial exact_divide(const Polynomial &p, const LinearForm &f) {
  auto [q, r] = divide_by_form(p, f);
  if (!r.is_zero())
    throw NotDivisibleError("polynomial not divisible by " + f.str(), std::move(r));
  return q;
}

namespace {

// Integer shifts T such that p vanishes identically on z_i = z_j + T*h.
std::vector<int> vanishing_shifts(const Polynomial &p, std::size_t i, std::size_t j) {
  std::size_t n = p.nvars();
  std::size_t hv = n - 1;
  std::size_t tv = n; // extra variable T
  std::vector<std::optional<Polynomial>> images(n);
  for (std::size_t v = 0; v < n; ++v)
    images[v] = Polynomial::variable(n + 1, v);
  images[i] = Polynomial::variable(n + 1, j) +
              Polynomial::variable(n + 1, tv) * Polynomial::variable(n + 1, hv);
  Polynomial s = p.substitute(images, n + 1);
  std::map<Monomial, std::vector<Rational>> groups;
  for (const auto &t : s.terms()) {
    Monomial m = t.mono;
    unsigned e = m[tv];
    m.set(tv, 0);
    auto &g = groups[m];
    if (g.size() <= e)
      g.resize(e + 1);
    g[e] = t.coeff;
  }
  UPoly g;
  for (auto &[m, cs] : groups)
    g = gcd(g, UPoly(cs));
  if (g.is_zero() || g.degree() < 1)
    return {};
  std::vector<int> out;
  for (const auto &r : g.rational_roots())
    if (r.get_den() == 1 && r.get_num().fits_sint_p())
      out.push_back(int(r.get_num().get_si()));
  return out;
}

} // namespace

std::optional<LinearFactorization> factor_linear(const Polynomial &p) {
  if (p.is_zero() || p.nvars() == 0)
    return std::nullopt;
  std::size_t n = p.nvars();
  std::size_t hv = n - 1;
  LinearFactorization out;
  Polynomial rest = p;
  while (!rest.is_constant()) {
    bool found = false;
    if (auto q = try_divide(rest, LinearForm{})) {
      out.forms.push_back(LinearForm{});
      rest = std::move(*q);
      continue;
    }
    std::vector<std::size_t> present;
    for (std::size_t v = 0; v < hv; ++v)
      if (rest.degree_in(v) > 0)
        present.push_back(v);
    for (std::size_t a = 0; a < present.size() && !found; ++a)
      for (std::size_t b = a + 1; b < present.size() && !found; ++b) {
        auto shifts = vanishing_shifts(rest, present[a], present[b]);
        if (shifts.empty())
          continue;
        // z_i = z_j + T*h  <=>  z_i - z_j - T*h = 0
        LinearForm f{-shifts.front(), int(present[a]), int(present[b])};
        rest = exact_divide(rest, f);
        out.forms.push_back(f);
        found = true;
      }
    if (!found)
      return std::nullopt;
  }
  out.constant = rest.constant_term();
  std::sort(out.forms.begin(), out.forms.end());
  return out;
}

} // namespace qkz::algebra
