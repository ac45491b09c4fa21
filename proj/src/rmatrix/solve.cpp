#include "qkz/rmatrix/solve.hpp"

#include <map>

#include "qkz/algebra/univariate.hpp"
#include "qkz/rmatrix/exchange.hpp"
#include "qkz/rmatrix/rcheck.hpp"

namespace qkz::rmatrix {

using algebra::Monomial;
using algebra::Rational;
using algebra::UPoly;
using algebra::URatFun;
using algebra::VariableSet;

namespace {

using Spectators = std::map<Monomial, UPoly>;

// Coefficients of p in the spectator monomials, each a polynomial in the
// variable `zvar`.
Spectators split(const Polynomial &p, std::size_t zvar) {
  std::map<Monomial, std::vector<Rational>> acc;
  for (const auto &t : p.terms()) {
    Monomial rest = t.mono;
    unsigned e = rest[zvar];
    rest.set(zvar, 0);
    auto &c = acc[rest];
    if (c.size() <= e)
      c.resize(e + 1);
    c[e] += t.coeff;
  }
  Spectators out;
  for (auto &[mono, c] : acc) {
    UPoly u(std::move(c));
    if (!u.is_zero())
      out.emplace(mono, std::move(u));
  }
  return out;
}

// Homogeneous lift of a univariate polynomial in z with h = 1 to degree d.
Polynomial lift(const UPoly &u, int d, const Polynomial &z, const Polynomial &h) {
  Polynomial out(z.nvars());
  for (int i = 0; i <= u.degree(); ++i)
    if (u[std::size_t(i)] != 0)
      out += z.pow(unsigned(i)) * h.pow(unsigned(d - i)) * u[std::size_t(i)];
  return out;
}

} // namespace

RFMatrix solve_rmatrix_from_exchange(const std::vector<Polynomial> &psi,
                                     const std::vector<Polynomial> &psi_swapped,
                                     const VariableSet &vars, std::size_t slot) {
  if (slot + 1 >= vars.spectral_count())
    throw PreconditionError("slot out of range");
  const std::size_t n = vars.size(), zvar = slot, hvar = vars.hbar_index();
  // z_slot -> z_{slot+1} + z (z stored in variable `slot`), h -> 1
  std::vector<std::optional<Polynomial>> images(n);
  images[slot] = vars.var(slot) + vars.var(slot + 1);
  images[hvar] = vars.constant(1);

  const std::size_t d = psi.size(), d2 = psi_swapped.size();
  std::vector<Spectators> cols(d), rhs(d2);
  std::map<Monomial, std::size_t> rows;
  for (std::size_t b = 0; b < d; ++b) {
    cols[b] = split(psi[b].substitute(images, n), zvar);
    for (const auto &e : cols[b])
      rows.emplace(e.first, 0);
  }
  for (std::size_t a = 0; a < d2; ++a) {
    rhs[a] = split(psi_swapped[a].swap(slot, slot + 1).substitute(images, n), zvar);
    for (const auto &e : rhs[a])
      rows.emplace(e.first, 0);
  }
  std::size_t r = 0;
  for (auto &e : rows)
    e.second = r++;

  // augmented system [C | L]: C * R^T = L
  std::vector<std::vector<URatFun>> aug(rows.size(), std::vector<URatFun>(d + d2));
  for (std::size_t b = 0; b < d; ++b)
    for (const auto &[mono, u] : cols[b])
      aug[rows.at(mono)][b] = u;
  for (std::size_t a = 0; a < d2; ++a)
    for (const auto &[mono, u] : rhs[a])
      aug[rows.at(mono)][d + a] = u;

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = pivot_row;
    while (p < aug.size() && aug[p][c].is_zero())
      ++p;
    if (p == aug.size())
      throw UnderdeterminedError("exchange relation leaves column " + std::to_string(c + 1) +
                                 " of the R-matrix undetermined");
    std::swap(aug[p], aug[pivot_row]);
    URatFun inv = URatFun(UPoly::constant(1)) / aug[pivot_row][c];
    for (auto &x : aug[pivot_row])
      x = x * inv;
    for (std::size_t i = 0; i < aug.size(); ++i) {
      if (i == pivot_row || aug[i][c].is_zero())
        continue;
      URatFun f = aug[i][c];
      for (std::size_t j = c; j < d + d2; ++j)
        aug[i][j] = aug[i][j] - f * aug[pivot_row][j];
    }
    ++pivot_row;
  }
  for (std::size_t i = d; i < aug.size(); ++i)
    for (std::size_t j = d; j < d + d2; ++j)
      if (!aug[i][j].is_zero())
        throw InconsistentError("exchange relation has no solution of the form R(z)");

  const auto &sc = spectral_context();
  Polynomial z = sc.z(1) - sc.z(2), h = sc.var(sc.hbar_index());
  RFMatrix out(d2, d, sc.size());
  for (std::size_t a = 0; a < d2; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const URatFun &v = aug[b][d + a];
      if (v.is_zero())
        continue;
      int deg = std::max(v.num().degree(), v.den().degree());
      out.set(a, b, RationalFunction::fraction(lift(v.num(), deg, z, h), lift(v.den(), deg, z, h)));
    }

  // the solution must reproduce the relation with all variables present
  auto applied = evaluate_local(out, vars.z(slot + 1) - vars.z(slot + 2), vars).apply(psi);
  for (std::size_t a = 0; a < d2; ++a)
    if (!(applied[a] == RationalFunction(psi_swapped[a].swap(slot, slot + 1))))
      throw InconsistentError("solved R-matrix does not satisfy the exchange relation in row " +
                              std::to_string(a + 1));
  return out;
}

} // namespace qkz::rmatrix
