#include "qkz/slice/slice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qkz/algebra/errors.hpp"

namespace qkz::slice {

using algebra::Rational;

namespace {

std::string coordinate_name(const std::vector<int> &m, std::size_t i, std::size_t j, int c) {
  const std::string idx = std::to_string(i + 1) + "," + std::to_string(j + 1);
  const bool all1 = std::all_of(m.begin(), m.end(), [](int x) { return x == 1; });
  const bool all2 = std::all_of(m.begin(), m.end(), [](int x) { return x == 2; });
  if (all1)
    return "X_{" + idx + "}";
  if (all2)
    return std::string(c == 1 ? "B" : "A") + "_{" + idx + "}";
  return "x_{" + idx + ";" + std::to_string(c) + "}";
}

SliceModel restrict(const SliceModel &model, const std::function<bool(const Coordinate &)> &keep,
                    SliceModel::Part part);

} // namespace

SliceModel build_slice(const std::vector<int> &m, int params) {
  if (m.empty() || std::any_of(m.begin(), m.end(), [](int x) { return x < 1; }))
    throw PreconditionError("m must be a non-empty sequence of positive integers");
  if (params < 0)
    throw PreconditionError("negative parameter count");
  SliceModel s;
  s.m_ = m;
  std::size_t start = 0;
  for (int mi : m) {
    s.starts_.push_back(start);
    start += std::size_t(mi);
  }
  s.M_ = start;
  s.params_ = params;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      for (int c = 1; c <= std::min(m[i], m[j]); ++c) {
        Coordinate x;
        x.i = i;
        x.j = j;
        x.c = c;
        x.row = s.starts_[i] + std::size_t(m[i]) - 1;
        x.col = s.starts_[j] + std::size_t(c) - 1;
        x.name = coordinate_name(m, i, j, c);
        names.push_back(x.name);
        s.coords_.push_back(x);
      }
  for (int a = 1; a <= params; ++a)
    names.push_back("t" + std::to_string(a));
  for (int a = 1; a <= params; ++a)
    names.push_back("e" + std::to_string(a));
  s.vars_ = VariableSet::named(names);
  s.weight_vars_ = VariableSet::spectral(m.size());
  return s;
}

namespace {

SliceModel restrict(const SliceModel &model, const std::function<bool(const Coordinate &)> &keep,
                    SliceModel::Part part) {
  std::vector<int> m = model.m();
  SliceModel s = build_slice(m, model.params());
  // rebuild with the surviving coordinates only
  std::vector<Coordinate> kept;
  for (const auto &x : s.coords())
    if (keep(x))
      kept.push_back(x);
  return SliceModel::rebuild(s, std::move(kept), part);
}

} // namespace

SliceModel SliceModel::rebuild(const SliceModel &base, std::vector<Coordinate> coords, Part part) {
  SliceModel s = base;
  s.coords_ = std::move(coords);
  s.part_ = part;
  std::vector<std::string> names;
  for (const auto &x : s.coords_)
    names.push_back(x.name);
  for (int a = 1; a <= s.params_; ++a)
    names.push_back("t" + std::to_string(a));
  for (int a = 1; a <= s.params_; ++a)
    names.push_back("e" + std::to_string(a));
  s.vars_ = VariableSet::named(names);
  return s;
}

SliceModel intersect_with_n(const SliceModel &model) {
  return restrict(model, [](const Coordinate &x) { return x.i < x.j; },
                  SliceModel::Part::strict_upper);
}

SliceModel intersect_with_b(const SliceModel &model) {
  return restrict(model, [](const Coordinate &x) { return x.i <= x.j; }, SliceModel::Part::upper);
}

std::optional<std::size_t> SliceModel::find(std::size_t i, std::size_t j, int c) const {
  for (std::size_t q = 0; q < coords_.size(); ++q)
    if (coords_[q].i == i && coords_[q].j == j && coords_[q].c == c)
      return q;
  return std::nullopt;
}

Polynomial SliceModel::weight(const Coordinate &x) const {
  const auto &w = weight_vars_;
  return w.z(x.i + 1) - w.z(x.j + 1) + w.half_hbar(m_[x.i] + m_[x.j] - 2 * (x.c - 1));
}

std::optional<Polynomial> SliceModel::weight_of(const Polynomial &p) const {
  const auto &w = weight_vars_;
  std::optional<Polynomial> out;
  for (const auto &t : p.terms()) {
    Polynomial mw(w.size());
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      unsigned e = t.mono[v];
      if (e == 0)
        continue;
      Polynomial one;
      if (v < coords_.size())
        one = weight(coords_[v]);
      else if (v < coords_.size() + std::size_t(params_))
        one = w.hbar();
      else
        one = w.hbar() * Rational(int(v - coords_.size()) - params_ + 1);
      mw += one * Rational(e);
    }
    if (out && !(*out == mw))
      return std::nullopt;
    out = std::move(mw);
  }
  if (!out)
    return w.constant(0);
  return out;
}

PolyMatrix identity_matrix(std::size_t n, std::size_t nvars) {
  PolyMatrix I(n, std::vector<Polynomial>(n, Polynomial(nvars)));
  for (std::size_t i = 0; i < n; ++i)
    I[i][i] = Polynomial::constant(nvars, 1);
  return I;
}

PolyMatrix SliceModel::matrix() const {
  const std::size_t nv = vars_.size();
  PolyMatrix X(M_, std::vector<Polynomial>(M_, Polynomial(nv)));
  for (std::size_t i = 0; i < m_.size(); ++i)
    for (int r = 0; r + 1 < m_[i]; ++r)
      X[starts_[i] + std::size_t(r)][starts_[i] + std::size_t(r) + 1] = Polynomial::constant(nv, 1);
  for (std::size_t q = 0; q < coords_.size(); ++q)
    X[coords_[q].row][coords_[q].col] = vars_.var(q);
  return X;
}

PolyMatrix SliceModel::column_matrix(int c) const {
  const std::size_t nv = vars_.size(), n = m_.size();
  PolyMatrix X(n, std::vector<Polynomial>(n, Polynomial(nv)));
  for (std::size_t q = 0; q < coords_.size(); ++q)
    if (coords_[q].c == c)
      X[coords_[q].i][coords_[q].j] = vars_.var(q);
  return X;
}

Polynomial SliceModel::t(int a) const {
  if (a < 1 || a > params_)
    throw PreconditionError("parameter index out of range");
  return vars_.var(coords_.size() + std::size_t(a) - 1);
}

Polynomial SliceModel::e(int a) const {
  if (a < 1 || a > params_)
    throw PreconditionError("parameter index out of range");
  return vars_.var(coords_.size() + std::size_t(params_ + a) - 1);
}

PolyMatrix matmul(const PolyMatrix &a, const PolyMatrix &b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  const std::size_t nv = a.empty() || a[0].empty() ? 0 : a[0][0].nvars();
  PolyMatrix out(n, std::vector<Polynomial>(p, Polynomial(nv)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero())
        continue;
      for (std::size_t j = 0; j < p; ++j)
        if (!b[l][j].is_zero())
          out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

PolyMatrix matpow(const PolyMatrix &a, unsigned e) {
  PolyMatrix out = identity_matrix(a.size(), a.empty() ? 0 : a[0][0].nvars());
  for (unsigned i = 0; i < e; ++i)
    out = matmul(out, a);
  return out;
}

namespace {

bool rectangular(const std::vector<int> &ell, int &L) {
  L = 0;
  for (int x : ell) {
    if (x == 0)
      continue;
    if (L != 0 && x != L)
      return false;
    L = x;
  }
  return true;
}

void check_ell(const SliceModel &model, const std::vector<int> &ell) {
  if (model.M() > 12)
    throw PreconditionError("slice equations are limited to M <= 12");
  if (std::accumulate(ell.begin(), ell.end(), 0) != int(model.M()))
    throw PreconditionError("ell must add up to M");
  if (std::any_of(ell.begin(), ell.end(), [](int x) { return x < 0; }))
    throw PreconditionError("ell has a negative entry");
}

std::string entry_name(const std::string &what, std::size_t i, std::size_t j) {
  return "(" + what + ")[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

// All (size x size) minors of A, as (row set, column set, determinant).
void minors(const PolyMatrix &A, std::size_t size, const std::string &what, EquationSet &out) {
  const std::size_t n = A.size();
  const std::size_t nv = A[0][0].nvars();
  auto binom = [](std::size_t a, std::size_t b) {
    double r = 1;
    for (std::size_t i = 1; i <= b; ++i)
      r = r * double(a - b + i) / double(i);
    return r;
  };
  if (binom(n, size) * binom(n, size) > 250000)
    throw PreconditionError("too many minors for this instance");
  std::vector<std::size_t> rows;
  std::function<void(std::size_t)> pick = [&](std::size_t start) {
    if (rows.size() == size) {
      // det over rows[0..t) and column mask, expanding along the last row
      std::vector<std::map<std::uint32_t, Polynomial>> level(size + 1);
      level[0][0] = Polynomial::constant(nv, 1);
      for (std::size_t t = 1; t <= size; ++t)
        for (const auto &[mask, d] : level[t - 1]) {
          if (d.is_zero())
            continue;
          int above = 0;
          for (std::size_t c = n; c-- > 0;) {
            if (mask & (1u << c)) {
              ++above;
              continue;
            }
            const Polynomial &a = A[rows[t - 1]][c];
            if (a.is_zero())
              continue;
            Polynomial term = a * d;
            if (above % 2)
              term = -term;
            auto &slot = level[t][mask | (1u << c)];
            if (slot.nvars() == 0)
              slot = Polynomial(nv);
            slot += term;
          }
        }
      for (const auto &[mask, d] : level[size]) {
        if (d.is_zero())
          continue;
        std::string name = "minor of " + what + " rows";
        for (auto r : rows)
          name += " " + std::to_string(r + 1);
        name += " cols";
        for (std::size_t c = 0; c < n; ++c)
          if (mask & (1u << c))
            name += " " + std::to_string(c + 1);
        out.relations.push_back({name, d, std::nullopt});
      }
      return;
    }
    for (std::size_t r = start; r < n; ++r) {
      rows.push_back(r);
      pick(r + 1);
      rows.pop_back();
    }
  };
  pick(0);
}

} // namespace

EquationSet emit_equations(const SliceModel &model, const std::vector<int> &ell) {
  check_ell(model, ell);
  PolyMatrix X = model.matrix();
  EquationSet out;
  int L = 0;
  if (rectangular(ell, L)) {
    PolyMatrix P = matpow(X, unsigned(L));
    for (std::size_t i = 0; i < P.size(); ++i)
      for (std::size_t j = 0; j < P.size(); ++j)
        if (!P[i][j].is_zero())
          out.relations.push_back({entry_name("X^" + std::to_string(L), i, j), P[i][j], {{i, j}}});
    return out;
  }
  const int top = *std::max_element(ell.begin(), ell.end());
  PolyMatrix P = X;
  for (int s = 1; s <= top; ++s) {
    if (s > 1)
      P = matmul(P, X);
    std::size_t r = 0;
    for (int x : ell)
      r += std::size_t(std::max(x - s, 0));
    if (r + 1 > model.M())
      continue;
    minors(P, r + 1, "X^" + std::to_string(s), out);
  }
  return out;
}

EquationSet emit_deformed_equations(const SliceModel &model, const std::vector<int> &ell) {
  check_ell(model, ell);
  int L = 0;
  if (!rectangular(ell, L))
    throw PreconditionError("deformed equations need rectangular ell");
  if (model.params() != L)
    throw PreconditionError("model must carry one parameter per factor of the product");
  PolyMatrix X = model.matrix();
  const std::size_t nv = model.vars().size(), M = model.M();
  PolyMatrix P(M, std::vector<Polynomial>(M, Polynomial(nv)));
  PolyMatrix power = identity_matrix(M, nv);
  // powers X^0 .. X^L, combined with (-1)^j e_j X^{L-j}
  std::vector<PolyMatrix> powers{power};
  for (int s = 1; s <= L; ++s)
    powers.push_back(matmul(powers.back(), X));
  for (int j = 0; j <= L; ++j) {
    Polynomial coef = j == 0 ? Polynomial::constant(nv, 1) : model.e(j);
    if (j % 2)
      coef = -coef;
    const auto &Q = powers[std::size_t(L - j)];
    for (std::size_t a = 0; a < M; ++a)
      for (std::size_t b = 0; b < M; ++b)
        if (!Q[a][b].is_zero())
          P[a][b] += coef * Q[a][b];
  }
  EquationSet out;
  for (std::size_t a = 0; a < M; ++a)
    for (std::size_t b = 0; b < M; ++b)
      if (!P[a][b].is_zero())
        out.relations.push_back({entry_name("prod(X - t)", a, b), P[a][b], {{a, b}}});
  return out;
}

Polynomial expand_elementary(const SliceModel &model, const Polynomial &p) {
  const std::size_t nv = model.vars().size();
  std::map<std::size_t, Polynomial> img;
  for (int a = 1; a <= model.params(); ++a) {
    Polynomial ea(nv);
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
      if (int(pick.size()) == a) {
        Polynomial prod = Polynomial::constant(nv, 1);
        for (int x : pick)
          prod *= model.t(x);
        ea += prod;
        return;
      }
      for (int x = start; x <= model.params(); ++x) {
        pick.push_back(x);
        rec(x + 1);
        pick.pop_back();
      }
    };
    rec(1);
    img[model.coords().size() + std::size_t(model.params() + a) - 1] = ea;
  }
  return p.substitute(img);
}

Polynomial linear_component_multidegree(const SliceModel &model,
                                        const std::vector<std::size_t> &vanishing) {
  Polynomial out = model.weight_vars().constant(1);
  for (auto q : vanishing)
    out *= model.weight(q);
  return out;
}

Polynomial complete_intersection_multidegree(const SliceModel &model,
                                             const std::vector<Polynomial> &constraints) {
  Polynomial out = model.weight_vars().constant(1);
  for (const auto &c : constraints) {
    auto w = model.weight_of(c);
    if (!w || c.is_zero() || c.is_constant())
      throw PreconditionError("constraint is not homogeneous for the torus grading");
    out *= *w;
  }
  return out;
}

namespace {

bool coordinate_free(const Polynomial &p, std::size_t ncoords) {
  for (const auto &t : p.terms())
    for (std::size_t v = 0; v < ncoords; ++v)
      if (t.mono[v])
        return false;
  return true;
}

// Substitute v = -r/c and clear the denominator c^D.
Polynomial eliminate(const Polynomial &p, const Elimination &e) {
  const int D = p.degree_in(e.var);
  if (D <= 0)
    return p;
  auto parts = p.coefficients_in(e.var);
  Polynomial out(p.nvars());
  Polynomial mr = -e.r;
  for (int j = 0; j <= D; ++j) {
    if (parts[std::size_t(j)].is_zero())
      continue;
    out += parts[std::size_t(j)] * mr.pow(unsigned(j)) * e.c.pow(unsigned(D - j));
  }
  out.make_primitive();
  return out;
}

Polynomial reduce(Polynomial p, const std::vector<Elimination> &elims) {
  for (const auto &e : elims) {
    if (p.is_zero())
      break;
    p = eliminate(p, e);
  }
  return p;
}

// Coordinate of `p` that appears linearly, by the preference order constant
// coefficient, parameter-only coefficient, then lowest degree.
std::optional<Elimination> pick_linear(const Polynomial &p, std::size_t ncoords,
                                       bool parameter_only,
                                       const std::vector<bool> &blocked = {}) {
  std::optional<Elimination> best;
  int best_rank = 0, best_deg = 0;
  for (std::size_t v = 0; v < ncoords; ++v) {
    if (p.degree_in(v) != 1 || (!blocked.empty() && blocked[v]))
      continue;
    auto parts = p.coefficients_in(v);
    const Polynomial &c = parts[1];
    int rank = c.is_constant() ? 0 : coordinate_free(c, ncoords) ? 1 : 2;
    if (parameter_only && rank == 2)
      continue;
    if (!best || rank < best_rank || (rank == best_rank && c.degree() < best_deg)) {
      best = Elimination{v, c, parts[0], parameter_only};
      best_rank = rank;
      best_deg = c.degree();
    }
  }
  return best;
}

Rational evaluate(const Polynomial &p, const std::vector<Rational> &point) {
  Rational out = 0;
  for (const auto &t : p.terms()) {
    Rational x = t.coeff;
    for (std::size_t v = 0; v < t.mono.size(); ++v)
      for (unsigned e = 0; e < t.mono[v]; ++e)
        x *= point[v];
    out += x;
  }
  return out;
}

} // namespace

MembershipReport verify_component_membership(const SliceModel &model,
                                             const std::vector<Polynomial> &constraints,
                                             const EquationSet &equations, bool allow_forcing) {
  const std::size_t nc = model.coords().size();
  MembershipReport rep;
  std::vector<Polynomial> eqs;
  for (const auto &r : equations.relations)
    eqs.push_back(model.params() ? expand_elementary(model, r.poly) : r.poly);

  // Coordinates mentioned by constraints not yet processed are left to them.
  auto force = [&](std::size_t next) {
    std::vector<bool> blocked(nc, false);
    for (std::size_t q = next; q < constraints.size(); ++q)
      for (const auto &t : constraints[q].terms())
        for (std::size_t v = 0; v < nc; ++v)
          if (t.mono[v])
            blocked[v] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto &q : eqs) {
        Polynomial g = reduce(q, rep.eliminations);
        if (g.is_zero())
          continue;
        if (auto e = pick_linear(g, nc, true, blocked)) {
          rep.eliminations.push_back(*e);
          ++rep.forced;
          changed = true;
          break;
        }
      }
    }
  };

  for (std::size_t q = 0; q < constraints.size(); ++q) {
    Polynomial g = reduce(constraints[q], rep.eliminations);
    if (g.is_zero()) {
      ++rep.implied_constraints;
      continue;
    }
    auto e = pick_linear(g, nc, false);
    if (!e) {
      rep.witness = "constraint " + std::to_string(q + 1) + " has no linear coordinate";
      return rep;
    }
    rep.eliminations.push_back(*e);
    if (allow_forcing)
      force(q + 1);
  }
  rep.free_coordinates = nc - rep.eliminations.size();
  for (std::size_t q = 0; q < eqs.size(); ++q)
    if (!reduce(eqs[q], rep.eliminations).is_zero()) {
      rep.witness = equations.relations[q].name + " does not vanish on the component";
      return rep;
    }
  rep.pass = true;
  return rep;
}

std::optional<std::vector<Rational>> sample_point(const SliceModel &model,
                                                  const MembershipReport &report,
                                                  std::mt19937_64 &rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  const std::size_t nc = model.coords().size();
  const int k = model.params();
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Rational> pt(model.vars().size(), 0);
    for (std::size_t v = 0; v < nc + std::size_t(k); ++v)
      pt[v] = dist(rng);
    for (int a = 1; a <= k; ++a)
      pt[nc + std::size_t(k + a) - 1] = evaluate(expand_elementary(model, model.e(a)), pt);
    bool ok = true;
    for (auto it = report.eliminations.rbegin(); it != report.eliminations.rend(); ++it) {
      Rational c = evaluate(it->c, pt);
      if (c == 0) {
        ok = false;
        break;
      }
      pt[it->var] = -evaluate(it->r, pt) / c;
    }
    if (ok)
      return pt;
  }
  return std::nullopt;
}

algebra::QMatrix evaluate_matrix(const SliceModel &model, const std::vector<Rational> &point) {
  PolyMatrix X = model.matrix();
  algebra::QMatrix out = algebra::qmatrix_zero(X.size(), X.size());
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = 0; j < X.size(); ++j)
      out[i][j] = evaluate(X[i][j], point);
  return out;
}

LabelSample sample_labels(const SliceModel &model, const MembershipReport &report,
                          const combinatorics::Tableau &expected, std::uint64_t seed,
                          std::size_t samples) {
  std::mt19937_64 rng(seed);
  LabelSample out;
  for (std::size_t s = 0; s < samples; ++s) {
    auto pt = sample_point(model, report, rng);
    if (!pt)
      throw ConsistencyError("could not sample a point of the component");
    out.labels.push_back(combinatorics::spaltenstein_label(evaluate_matrix(model, *pt), model.m()));
    if (out.labels.back() == expected)
      ++out.matches;
  }
  return out;
}

} // namespace qkz::slice
