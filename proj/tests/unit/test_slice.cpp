#include "doctest.h"

#include <numeric>

#include "qkz/algebra/io.hpp"
#include "qkz/slice/expr.hpp"
#include "qkz/slice/slice.hpp"

using namespace qkz;
using namespace qkz::slice;
using algebra::Rational;

namespace {

Polynomial wpoly(const std::string &text, const SliceModel &model) {
  return algebra::parse_polynomial(text, model.weight_vars());
}

std::size_t index_of(const SliceModel &model, const std::string &name) {
  return model.vars().index_of(name);
}

const std::vector<int> kM{2, 2, 2, 2};
const std::vector<int> kEll{4, 4, 0, 0};

} // namespace

TEST_CASE("slice coordinates and weights") {
  auto s = build_slice(kM);
  CHECK(s.M() == 8);
  CHECK(s.coords().size() == 32);
  auto b12 = s.coords()[index_of(s, "B_{1,2}")];
  auto a12 = s.coords()[index_of(s, "A_{1,2}")];
  CHECK(b12.row == 1);
  CHECK(b12.col == 2);
  CHECK(a12.col == 3);
  CHECK(s.weight(b12) == wpoly("2*hb + z1 - z2", s));
  CHECK(s.weight(a12) == wpoly("hb + z1 - z2", s));
  // scaling part: 2 hbar for B, hbar for A
  CHECK(s.weight(s.coords()[index_of(s, "B_{3,3}")]) == wpoly("2*hb", s));
  CHECK(s.weight(s.coords()[index_of(s, "A_{4,4}")]) == wpoly("hb", s));

  auto ones = build_slice({1, 1});
  for (const auto &x : ones.coords())
    CHECK(ones.weight(x) == wpoly("hb + z" + std::to_string(x.i + 1) + " - z" +
                                      std::to_string(x.j + 1), ones));

  auto mixed = build_slice({3, 1});
  auto q = mixed.find(0, 1, 1);
  REQUIRE(q);
  CHECK(mixed.weight(*q) == wpoly("2*hb + z1 - z2", mixed));
  CHECK(!mixed.find(0, 1, 2));
  CHECK(mixed.coords()[*q].name == "x_{1,2;1}");
}

TEST_CASE("slice matrix structure") {
  auto s = build_slice({3, 2});
  auto X = s.matrix();
  REQUIRE(X.size() == 5);
  const auto one = s.vars().constant(1);
  CHECK(X[0][1] == one);
  CHECK(X[1][2] == one);
  CHECK(X[3][4] == one);
  CHECK(X[2][3].is_zero() == false); // last row of block 1 holds coordinates
  CHECK(X[0][0].is_zero());
  CHECK(X[1][0].is_zero());
  CHECK(X[2][0] == s.vars().var("x_{1,1;1}"));
  CHECK(X[4][0] == s.vars().var("x_{2,1;1}"));
  CHECK(X[4][2].is_zero()); // column 3 of block 1 exceeds min(2, 3)
}

TEST_CASE("coordinate counts") {
  for (const auto &m : std::vector<std::vector<int>>{{2, 2, 2, 2}, {3, 1}, {1, 2, 3}, {1, 1, 1, 1}}) {
    auto s = build_slice(m);
    std::size_t all = 0, strict = 0, upper = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) {
        std::size_t c = std::size_t(std::min(m[i], m[j]));
        all += c;
        strict += i < j ? c : 0;
        upper += i <= j ? c : 0;
      }
    CHECK(s.coords().size() == all);
    CHECK(intersect_with_n(s).coords().size() == strict);
    CHECK(intersect_with_b(s).coords().size() == upper);
  }
  auto n = intersect_with_n(build_slice({1, 1, 1}));
  for (const auto &x : n.coords())
    CHECK(x.i < x.j);
  CHECK(n.coords().size() == 3);
}

TEST_CASE("emit equations, small cases") {
  auto one = build_slice({1});
  auto e1 = emit_equations(one, {1});
  REQUIRE(e1.relations.size() == 1);
  CHECK(e1.relations[0].poly == one.vars().var(0));

  auto two = intersect_with_n(build_slice({1, 1}));
  CHECK(emit_equations(two, {2, 0}).relations.empty());

  // rank X <= 1 and X^2 = 0 on strict upper 3x3: every relation is +-ac
  auto three = intersect_with_n(build_slice({1, 1, 1}));
  auto e3 = emit_equations(three, {2, 1, 0});
  REQUIRE(!e3.relations.empty());
  Polynomial ac = three.vars().var("X_{1,2}") * three.vars().var("X_{2,3}");
  for (const auto &r : e3.relations)
    CHECK((r.poly == ac || r.poly == -ac));

  CHECK_THROWS_AS(emit_equations(build_slice({13}), {13}), PreconditionError);
  CHECK_THROWS_AS(emit_equations(build_slice({2, 2}), {4, 4}), PreconditionError);
}

TEST_CASE("emitted relations are homogeneous") {
  std::vector<std::pair<SliceModel, std::vector<int>>> cases{
      {build_slice(kM), kEll},
      {intersect_with_n(build_slice(kM)), kEll},
      {build_slice({1, 1, 1}), {2, 1, 0}},
      {build_slice({2, 1, 1}), {2, 2, 0}},
      {build_slice({3, 1}), {2, 2}}};
  for (const auto &[model, ell] : cases) {
    auto eqs = emit_equations(model, ell);
    for (const auto &r : eqs.relations) {
      CAPTURE(r.name);
      CHECK(model.weight_of(r.poly).has_value());
    }
  }
  auto d = build_slice(kM, 4);
  for (const auto &r : emit_deformed_equations(d, kEll).relations) {
    CAPTURE(r.name);
    CHECK(d.weight_of(r.poly).has_value());
  }
}

TEST_CASE("deformed equations") {
  // t = 0 gives the undeformed relations entry by entry
  auto d = build_slice({1, 1, 1}, 3);
  auto plain = build_slice({1, 1, 1});
  auto de = emit_deformed_equations(d, {3, 0, 0});
  auto pe = emit_equations(plain, {3, 0, 0});
  REQUIRE(de.relations.size() == pe.relations.size());
  const std::size_t nc = d.coords().size();
  std::vector<std::optional<Polynomial>> drop(d.vars().size());
  for (std::size_t v = 0; v < nc; ++v)
    drop[v] = Polynomial::variable(nc, v);
  for (std::size_t v = nc; v < d.vars().size(); ++v)
    drop[v] = Polynomial(nc);
  for (std::size_t q = 0; q < de.relations.size(); ++q)
    CHECK(de.relations[q].poly.substitute(drop, nc) == pe.relations[q].poly);

  // a numeric matrix with eigenvalues t_1, t_2 satisfies (X - t_1)(X - t_2) = 0
  auto s = build_slice({1, 1}, 2);
  std::vector<Rational> pt(s.vars().size());
  pt[index_of(s, "X_{1,1}")] = 1;
  pt[index_of(s, "X_{1,2}")] = 2;
  pt[index_of(s, "X_{2,1}")] = 0;
  pt[index_of(s, "X_{2,2}")] = 3;
  pt[index_of(s, "t1")] = 1;
  pt[index_of(s, "t2")] = 3;
  pt[index_of(s, "e1")] = 4;
  pt[index_of(s, "e2")] = 3;
  for (const auto &r : emit_deformed_equations(s, {2, 0}).relations) {
    std::map<std::size_t, Polynomial> at;
    for (std::size_t v = 0; v < s.vars().size(); ++v)
      at[v] = s.vars().constant(pt[v]);
    CHECK(r.poly.substitute(at).is_zero());
  }
  CHECK_THROWS_AS(emit_deformed_equations(build_slice({1, 1, 1}, 2), {2, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(emit_deformed_equations(build_slice({1, 1}, 1), {2, 0}), PreconditionError);

  // elementary symmetric expansion
  auto e = build_slice({1}, 3);
  CHECK(expand_elementary(e, e.e(2)) ==
        e.t(1) * e.t(2) + e.t(1) * e.t(3) + e.t(2) * e.t(3));
}

TEST_CASE("matrix expressions") {
  auto n = intersect_with_n(build_slice(kM));
  auto A = n.column_matrix(2), B = n.column_matrix(1);
  CHECK(parse_scalar_expression("A_{1,2}", n) == n.vars().var("A_{1,2}"));
  auto lhs = parse_matrix("A^3+AB+BA", n);
  auto rhs = matmul(matmul(A, A), A);
  auto AB = matmul(A, B), BA = matmul(B, A);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(lhs[i][j] == rhs[i][j] + AB[i][j] + BA[i][j]);
  CHECK(parse_scalar_expression("(B^2)_{1,4}", n) == matmul(B, B)[0][3]);
  auto d = build_slice(kM, 4);
  auto shifted = parse_matrix("A + e_2", d);
  CHECK(shifted[1][1] == d.column_matrix(2)[1][1] + d.e(2));
  CHECK(shifted[0][1] == d.column_matrix(2)[0][1]);
  CHECK_THROWS_AS(parse_matrix_expression("A + Q", n), PreconditionError);
  CHECK_THROWS_AS(parse_matrix_expression("A_{5,1}", n), PreconditionError);
  CHECK_THROWS_AS(parse_matrix("A_{1,2}", n), PreconditionError);
  CHECK_THROWS_AS(parse_matrix("A", build_slice({1, 1})), PreconditionError);
}

TEST_CASE("linear component multidegree") {
  auto n = intersect_with_n(build_slice(kM));
  CHECK(linear_component_multidegree(n, {}) == n.weight_vars().constant(1));
  std::vector<std::size_t> all(n.coords().size());
  std::iota(all.begin(), all.end(), 0);
  Polynomial prod = n.weight_vars().constant(1);
  for (std::size_t q = 0; q < all.size(); ++q)
    prod *= n.weight(q);
  CHECK(linear_component_multidegree(n, all) == prod);
  CHECK(prod.degree() == int(all.size()));
  std::vector<std::size_t> v{index_of(n, "A_{1,2}"), index_of(n, "A_{3,4}"), index_of(n, "B_{1,2}"),
                             index_of(n, "B_{3,4}")};
  CHECK(linear_component_multidegree(n, v) ==
        wpoly("(hb + z1 - z2)*(hb + z3 - z4)*(2*hb + z1 - z2)*(2*hb + z3 - z4)", n));
  CHECK_THROWS_AS(complete_intersection_multidegree(n, {n.vars().var(0) + n.vars().constant(1)}),
                  PreconditionError);
}

TEST_CASE("component membership") {
  auto n = intersect_with_n(build_slice(kM));
  auto eqs = emit_equations(n, kEll);
  auto cons = [&](std::vector<std::string> text) {
    std::vector<Polynomial> out;
    for (const auto &t : text)
      out.push_back(parse_scalar_expression(t, n));
    return out;
  };
  auto r2 = verify_component_membership(n, cons({"B_{1,2}", "B_{2,3}", "B_{3,4}", "(A^3+AB+BA)_{1,4}"}), eqs);
  CHECK(r2.pass);
  CHECK(r2.free_coordinates == 8);
  CHECK(r2.implied_constraints == 0);

  // too few constraints: the locus is not inside Z_0
  auto bad = verify_component_membership(n, cons({"A_{1,2}", "A_{3,4}", "B_{1,2}"}), eqs);
  CHECK(!bad.pass);
  CHECK(!bad.witness.empty());

  // a repeated constraint is reported as implied
  auto rep = verify_component_membership(
      n, cons({"A_{1,2}", "A_{3,4}", "B_{1,2}", "B_{3,4}", "A_{1,2}"}), eqs);
  CHECK(rep.pass);
  CHECK(rep.implied_constraints == 1);

  // constraint with no linear coordinate
  auto nl = verify_component_membership(n, cons({"A_{1,2}^2"}), eqs);
  CHECK(!nl.pass);
}

TEST_CASE("sampling and labels") {
  auto n = intersect_with_n(build_slice({1, 1, 1, 1}));
  auto eqs = emit_equations(n, {2, 2, 0, 0});
  std::vector<Polynomial> cons{n.vars().var("X_{1,2}"), n.vars().var("X_{3,4}")};
  auto rep = verify_component_membership(n, cons, eqs);
  REQUIRE(rep.pass);
  CHECK(rep.free_coordinates == 4);
  std::mt19937_64 rng(7);
  auto pt = sample_point(n, rep, rng);
  REQUIRE(pt);
  auto X = evaluate_matrix(n, *pt);
  CHECK(X[0][1] == 0);
  CHECK(X[2][3] == 0);
  auto labels = sample_labels(n, rep, combinatorics::Tableau({{1, 2}, {3, 4}}), 11, 10);
  CHECK(labels.labels.size() == 10);
  CHECK(labels.matches >= 9);
  // same seed, same labels
  auto again = sample_labels(n, rep, combinatorics::Tableau({{1, 2}, {3, 4}}), 11, 10);
  CHECK(again.labels == labels.labels);
}
