#include "qkz/cli/appendix.hpp"

#include <chrono>
#include <algorithm>
#include <functional>

#include "qkz/algebra/errors.hpp"
#include "qkz/algebra/io.hpp"
#include "qkz/psi/checks.hpp"
#include "qkz/rmatrix/rcheck.hpp"
#include "qkz/rmatrix/solve.hpp"
#include "qkz/slice/expr.hpp"
#include "qkz/slice/slice.hpp"

namespace qkz::cli {

using slice::PolyMatrix;
using slice::SliceModel;

namespace {

const std::vector<int> kM{2, 2, 2, 2};
const std::vector<int> kLambda{2, 2, 2, 2};
const std::vector<int> kEll{4, 4, 0, 0};

CheckResult fail(std::string check, std::string witness) { return {std::move(check), false, std::move(witness)}; }

CheckResult all_of(std::string check, const std::vector<CheckResult> &parts) {
  for (const auto &p : parts)
    if (!p.pass)
      return fail(std::move(check), p.check + ": " + p.witness);
  return {std::move(check), true, ""};
}

// Blocks of an M x M matrix in the order (first rows, last rows) x (first
// columns, last columns) of the size-2 blocks.
PolyMatrix block(const PolyMatrix &X, std::size_t r, std::size_t c) {
  const std::size_t n = X.size() / 2;
  PolyMatrix out(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = X[2 * i + r][2 * j + c];
  return out;
}

PolyMatrix add(PolyMatrix a, const PolyMatrix &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      a[i][j] += b[i][j];
  return a;
}

std::string first_difference(const PolyMatrix &a, const PolyMatrix &b, const SliceModel &model) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a[i][j] == b[i][j]))
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "): " + algebra::to_text(a[i][j] - b[i][j], model.vars());
  return "";
}

// Matrix with the emitted entry relations at their positions.
PolyMatrix assemble(const slice::EquationSet &eqs, const SliceModel &model) {
  const std::size_t M = model.M();
  PolyMatrix P(M, std::vector<Polynomial>(M, Polynomial(model.vars().size())));
  for (const auto &r : eqs.relations) {
    if (!r.entry)
      throw PreconditionError("expected entry relations");
    P[r.entry->first][r.entry->second] = r.poly;
  }
  return P;
}

SliceModel z0_model() { return slice::intersect_with_n(slice::build_slice(kM)); }

std::vector<Polynomial> constraints_of(const ComponentFixture &c, const SliceModel &model) {
  std::vector<Polynomial> out;
  for (const auto &s : c.constraints)
    out.push_back(slice::parse_scalar_expression(s, model));
  return out;
}

// Block identities tying X^4 (or prod (X - t_a)) to the printed relations
// D1 (top-left), D2, D3 (top-right):
//   TL = D1, TR = D3, BL = D3 B, BR = D2 + A D3.
std::string block_identities(const PolyMatrix &P, const PolyMatrix &D1, const PolyMatrix &D2,
                             const PolyMatrix &D3, const SliceModel &model) {
  const PolyMatrix A = model.column_matrix(2), B = model.column_matrix(1);
  std::vector<std::pair<std::string, std::pair<PolyMatrix, PolyMatrix>>> cmp{
      {"top-left", {block(P, 0, 0), D1}},
      {"top-right", {block(P, 0, 1), D3}},
      {"bottom-left", {block(P, 1, 0), slice::matmul(D3, B)}},
      {"bottom-right", {block(P, 1, 1), add(D2, slice::matmul(A, D3))}}};
  for (const auto &[name, pq] : cmp)
    if (auto d = first_difference(pq.first, pq.second, model); !d.empty())
      return name + " block " + d;
  return "";
}


} // namespace

nlohmann::json to_json(const Report &r) {
  return {{"schema", 1},       {"check", r.check},     {"instance", r.instance},
          {"status", r.status}, {"witness", r.witness}, {"seconds", r.seconds}};
}

psi::PsiVector appendix_psi(const AppendixFixture &fx) {
  psi::PsiVector v = psi::component_psi(4, kLambda, kM, fx.psi);
  if (v.tableaux != fx.tableaux)
    throw PreconditionError("fixture tableaux are not in the enumeration order");
  return v;
}

rmatrix::FixedFamily appendix_family(const AppendixFixture &fx) {
  std::vector<std::string> labels;
  for (const auto &t : fx.tableaux)
    labels.push_back(t.str());
  return rmatrix::FixedFamily(labels, {fx.r13, fx.r2, fx.r13});
}

rmatrix::RFMatrix appendix_rho(const AppendixFixture &fx) {
  return rmatrix::RFMatrix::from_integers(fx.rho, algebra::VariableSet::spectral(4).size());
}

CheckResult check_appendix_exchange(const AppendixFixture &fx) {
  auto v = appendix_psi(fx);
  auto fam = appendix_family(fx);
  std::vector<CheckResult> parts;
  for (std::size_t slot = 0; slot < 3; ++slot)
    parts.push_back(psi::check_exchange(v, fam, slot));
  return all_of("appendix exchange", parts);
}

CheckResult check_appendix_solve(const AppendixFixture &fx) {
  auto v = appendix_psi(fx);
  const rmatrix::RFMatrix *printed[3] = {&fx.r13, &fx.r2, &fx.r13};
  for (std::size_t slot = 0; slot < 3; ++slot) {
    auto r = rmatrix::solve_rmatrix_from_exchange(v.entries, v.entries, v.vars, slot);
    if (!(r == *printed[slot]))
      return fail("appendix solve", [&] {
        auto d = r.first_difference(*printed[slot]);
        std::string w = "slot " + std::to_string(slot + 1);
        if (d)
          w += " entry (" + std::to_string(d->first + 1) + "," + std::to_string(d->second + 1) + ")";
        return w;
      }());
  }
  return {"appendix solve", true, ""};
}

CheckResult check_appendix_relations(const AppendixFixture &fx) {
  return all_of("appendix relations", rmatrix::verify_relations(appendix_family(fx), kM));
}

CheckResult check_appendix_wheel(const AppendixFixture &fx) {
  auto parts = psi::check_wheel_all(appendix_psi(fx), 3);
  if (parts.size() != 4)
    return fail("appendix wheel", "expected four placements");
  return all_of("appendix wheel", parts);
}

CheckResult check_appendix_cyclicity(const AppendixFixture &fx) {
  auto v = appendix_psi(fx);
  const auto &vs = v.vars;
  if (!(fx.shift == vs.hbar() * algebra::Rational(5)))
    return fail("appendix cyclicity", "printed shift is not (k+1) hbar");
  auto rho = appendix_rho(fx);
  if (!(psi::rho_for(v, v) == rho))
    return fail("appendix cyclicity", "rho from promotion differs from the printed rho");
  int eps = combinatorics::rho_epsilon(8, 4);
  if ((kM[0] % 2 ? eps : 1) != 1)
    return fail("appendix cyclicity", "eps^{m_1} is not +1");
  auto r = psi::check_cyclicity(v, v, rho);
  r.check = "appendix cyclicity";
  return r;
}

CheckResult check_appendix_qkz(const AppendixFixture &fx) {
  auto v = appendix_psi(fx);
  auto fam = appendix_family(fx);
  auto rho = appendix_rho(fx);
  std::vector<CheckResult> parts;
  for (std::size_t i = 0; i < 4; ++i)
    parts.push_back(psi::qkz_step(v, fam, rho, i));
  return all_of("appendix qKZ", parts);
}

CheckResult check_appendix_equations(const AppendixFixture &fx) {
  const std::string name = "appendix equations";
  if (fx.equations.size() != 3)
    return fail(name, "expected three printed relations");
  for (const auto &model : {slice::build_slice(kM), z0_model()}) {
    PolyMatrix X4 = assemble(slice::emit_equations(model, kEll), model);
    PolyMatrix D1 = slice::parse_matrix(fx.equations[1], model);
    PolyMatrix D2 = slice::parse_matrix(fx.equations[0], model);
    PolyMatrix D3 = slice::parse_matrix(fx.equations[2], model);
    if (auto d = block_identities(X4, D1, D2, D3, model); !d.empty())
      return fail(name, d);
  }
  return {name, true, ""};
}

CheckResult check_appendix_deformed(const AppendixFixture &fx) {
  const std::string name = "appendix deformed equations";
  if (fx.deformed.size() != 3)
    return fail(name, "expected three printed relations");
  auto model = slice::build_slice(kM, 4);
  auto eqs = slice::emit_deformed_equations(model, kEll);
  PolyMatrix direct = assemble(eqs, model);
  PolyMatrix D1 = slice::parse_matrix(fx.deformed[0], model);
  PolyMatrix D2 = slice::parse_matrix(fx.deformed[1], model);
  PolyMatrix D3 = slice::parse_matrix(fx.deformed[2], model);
  if (auto d = block_identities(direct, D1, D2, D3, model); !d.empty())
    return fail(name, d);
  // t = 0 gives back the undeformed relations
  auto plain = slice::emit_equations(slice::build_slice(kM), kEll);
  if (plain.relations.size() != eqs.relations.size())
    return fail(name, "t = 0 changes the number of relations");
  std::map<std::size_t, Polynomial> zero;
  const std::size_t nc = model.coords().size();
  for (std::size_t v = nc; v < model.vars().size(); ++v)
    zero[v] = Polynomial(model.vars().size());
  for (std::size_t q = 0; q < eqs.relations.size(); ++q) {
    Polynomial a = eqs.relations[q].poly.substitute(zero);
    std::vector<std::optional<Polynomial>> keep(model.vars().size());
    for (std::size_t v = 0; v < nc; ++v)
      keep[v] = Polynomial::variable(nc, v);
    for (std::size_t v = nc; v < model.vars().size(); ++v)
      keep[v] = Polynomial(nc);
    if (!(a.substitute(keep, nc) == plain.relations[q].poly) ||
        eqs.relations[q].name.substr(eqs.relations[q].name.find('[')) !=
            plain.relations[q].name.substr(plain.relations[q].name.find('[')))
      return fail(name, "t = 0 differs at " + plain.relations[q].name);
  }
  return {name, true, ""};
}

CheckResult check_appendix_components(const AppendixFixture &fx) {
  const std::string name = "appendix components";
  auto model = z0_model();
  auto eqs = slice::emit_equations(model, kEll);
  const std::size_t codim = std::size_t(psi::expected_degree(kLambda));
  for (const auto &c : fx.components) {
    auto rep = slice::verify_component_membership(model, constraints_of(c, model), eqs);
    if (!rep.pass)
      return fail(name, c.label.str() + ": " + rep.witness);
    if (rep.free_coordinates != model.coords().size() - codim)
      return fail(name, c.label.str() + ": dimension " + std::to_string(rep.free_coordinates));
  }
  // deformed component on upper triangular A, B
  const auto &dc = fx.deformed_component;
  auto bmodel = slice::intersect_with_b(slice::build_slice(kM, 4));
  std::vector<Polynomial> cons;
  for (std::size_t i = 0; i < dc.alpha.size(); ++i) {
    Polynomial sum(bmodel.vars().size()), prod = bmodel.vars().constant(1);
    for (int a : dc.alpha[i]) {
      sum += bmodel.t(a);
      prod *= bmodel.t(a);
    }
    auto A = bmodel.find(i, i, 2), B = bmodel.find(i, i, 1);
    cons.push_back(bmodel.vars().var(*A) - sum);
    cons.push_back(bmodel.vars().var(*B) + prod);
  }
  for (const auto &q : dc.quadrics)
    cons.push_back(slice::parse_scalar_expression(q, bmodel));
  auto deq = slice::emit_deformed_equations(bmodel, kEll);
  auto rep = slice::verify_component_membership(bmodel, cons, deq, true);
  if (!rep.pass)
    return fail(name, "deformed component: " + rep.witness);
  const std::size_t zdim = model.coords().size() - codim;
  if (rep.free_coordinates != zdim)
    return fail(name, "deformed component has dimension " + std::to_string(rep.free_coordinates));
  return {name, true, ""};
}

CheckResult check_appendix_multidegrees(const AppendixFixture &fx) {
  const std::string name = "appendix multidegrees";
  auto model = z0_model();
  const auto &vs = model.weight_vars();
  if (fx.components.size() != fx.psi.size())
    return fail(name, "component and multidegree fixtures differ in length");
  for (std::size_t q = 0; q < fx.components.size(); ++q) {
    const auto &c = fx.components[q];
    if (!(c.label == fx.tableaux[q]))
      return fail(name, "component labels are not in multidegree order");
    auto cons = constraints_of(c, model);
    Polynomial deg = slice::complete_intersection_multidegree(model, cons);
    // purely linear coordinate constraints go through the coordinate-subspace rule too
    std::vector<std::size_t> vanishing;
    for (const auto &p : cons)
      if (p.size() == 1 && p.degree() == 1)
        for (std::size_t v = 0; v < model.coords().size(); ++v)
          if (p.degree_in(v) == 1)
            vanishing.push_back(v);
    if (vanishing.size() == cons.size() &&
        !(slice::linear_component_multidegree(model, vanishing) == deg))
      return fail(name, c.label.str() + ": coordinate-subspace rule disagrees");
    if (!(deg == fx.psi[q]))
      return fail(name, c.label.str() + ": " + algebra::to_text(deg, vs) + " vs printed " +
                            algebra::to_text(fx.psi[q], vs));
  }
  return {name, true, ""};
}

CheckResult check_appendix_labels(const AppendixFixture &fx, std::uint64_t seed,
                                  std::size_t samples, std::size_t needed) {
  const std::string name = "appendix labels";
  auto model = z0_model();
  auto eqs = slice::emit_equations(model, kEll);
  for (const auto &c : fx.components) {
    auto rep = slice::verify_component_membership(model, constraints_of(c, model), eqs);
    if (!rep.pass)
      return fail(name, c.label.str() + ": " + rep.witness);
    auto s = slice::sample_labels(model, rep, c.label, seed, samples);
    if (s.matches < needed)
      return fail(name, c.label.str() + ": " + std::to_string(s.matches) + "/" +
                            std::to_string(samples) + " samples match");
    for (const auto &l : s.labels)
      if (!(l == c.label) && !combinatorics::tableau_dominated_by(l, c.label, 4))
        return fail(name, c.label.str() + ": minority label " + l.str() + " is not dominated");
  }
  return {name, true, ""};
}

psi::PsiVector slice_component_psi(int k, const std::vector<int> &lambda,
                                   const std::vector<int> &m, const std::vector<int> &ell,
                                   const std::vector<ComponentFixture> &components) {
  auto model = slice::intersect_with_n(slice::build_slice(m));
  auto eqs = slice::emit_equations(model, ell);
  const std::size_t codim = std::size_t(psi::expected_degree(lambda));
  auto tableaux = combinatorics::enumerate_tableaux(lambda, m);
  if (tableaux.size() != components.size())
    throw ConsistencyError("expected " + std::to_string(tableaux.size()) + " components");
  std::vector<Polynomial> entries(tableaux.size());
  std::vector<bool> seen(tableaux.size(), false);
  for (const auto &c : components) {
    auto it = std::find(tableaux.begin(), tableaux.end(), c.label);
    if (it == tableaux.end())
      throw ConsistencyError("component label " + c.label.str() + " is not a tableau");
    const std::size_t idx = std::size_t(it - tableaux.begin());
    if (seen[idx])
      throw ConsistencyError("component label " + c.label.str() + " repeated");
    seen[idx] = true;
    auto cons = constraints_of(c, model);
    auto rep = slice::verify_component_membership(model, cons, eqs);
    if (!rep.pass)
      throw ConsistencyError(c.label.str() + ": " + rep.witness);
    if (rep.free_coordinates + codim != model.coords().size())
      throw ConsistencyError(c.label.str() + ": wrong dimension");
    entries[idx] = slice::complete_intersection_multidegree(model, cons);
  }
  return psi::component_psi(k, lambda, m, entries);
}

CheckResult check_k2_recurrence(const std::vector<ComponentFixture> &components) {
  auto big = slice_component_psi(2, {2, 2}, {1, 1, 1, 1}, {2, 2, 0, 0}, components);
  const auto vs2 = algebra::VariableSet::spectral(2);
  auto small = psi::component_psi(2, {1, 1}, {1, 1}, {vs2.constant(1)});
  std::vector<CheckResult> parts;
  for (std::size_t p = 0; p + 1 < 4; ++p)
    parts.push_back(psi::check_recurrence(big, small, p));
  return all_of("k=2 recurrence", parts);
}

AppendixFixture perturb_fixture(AppendixFixture fx, const std::string &what) {
  if (what == "rho") {
    fx.rho.at(0).at(0) = 1 - fx.rho.at(0).at(0);
  } else if (what == "deformed") {
    auto &r = fx.deformed.at(0);
    auto at = r.rfind('+');
    if (at == std::string::npos)
      throw PreconditionError("deformed fixture has no sign to flip");
    r[at] = '-';
  } else if (what == "equations") {
    fx.equations.at(0) = "B(A^2-B)";
  } else {
    throw PreconditionError("unknown fixture item '" + what + "' (rho, deformed, equations)");
  }
  return fx;
}

std::vector<Report> run_appendix_suite(const AppendixFixture &fx) {
  using Check = std::function<CheckResult()>;
  std::vector<std::pair<std::string, Check>> checks{
      {"equations", [&] { return check_appendix_equations(fx); }},
      {"components", [&] { return check_appendix_components(fx); }},
      {"multidegrees", [&] { return check_appendix_multidegrees(fx); }},
      {"rmatrix",
       [&] {
         return all_of("rmatrix", {check_appendix_exchange(fx), check_appendix_solve(fx)});
       }},
      {"relations", [&] { return check_appendix_relations(fx); }},
      {"cyclicity", [&] { return check_appendix_cyclicity(fx); }},
      {"wheel", [&] { return check_appendix_wheel(fx); }},
      {"deformed", [&] { return check_appendix_deformed(fx); }}};
  std::vector<Report> out;
  for (const auto &[name, fn] : checks) {
    auto t0 = std::chrono::steady_clock::now();
    Report r{name, "appendix k=4 m=2,2,2,2", "fail", "", 0};
    try {
      auto res = fn();
      r.status = res.pass ? "pass" : "fail";
      r.witness = res.witness;
    } catch (const std::exception &e) {
      r.witness = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(r);
  }
  return out;
}

} // namespace qkz::cli
