#include "doctest.h"

#include "qkz/algebra/io.hpp"
#include "qkz/cli/appendix.hpp"
#include "qkz/psi/checks.hpp"
#include "qkz/rmatrix/rcheck.hpp"
#include "qkz/rmatrix/solve.hpp"

using namespace qkz;
using namespace qkz::cli;

namespace {

const AppendixFixture &fixture() {
  static const AppendixFixture fx = load_appendix(std::filesystem::path(QKZ_DATA_DIR) / "appendix");
  return fx;
}

void require_pass(const CheckResult &r) {
  CAPTURE(r.check);
  CAPTURE(r.witness);
  CHECK(r.pass);
}

} // namespace

TEST_CASE("latex rewriting") {
  CHECK(latex_to_plain("2\\hbar+z_1-z_{2}") == "2 hb +z1 -z2 ");
  CHECK(latex_to_plain("\\frac{2 z}{2 \\hbar+z}") == "((2 z)/(2  hb +z))");
  CHECK(latex_to_plain("t_3(t_3-t_2)") == "t3 (t3 -t2 )");
  CHECK_THROWS_AS(latex_to_plain("\\sqrt{2}"), PreconditionError);
  CHECK(parse_tableau("\\tableau{1&2\\\\1&3\\\\2&4\\\\3&4}") ==
        combinatorics::Tableau({{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
  CHECK(parse_tableau("1&3\\\\2&4") == combinatorics::Tableau({{1, 3}, {2, 4}}));
}

TEST_CASE("appendix fixture contents") {
  const auto &fx = fixture();
  REQUIRE(fx.psi.size() == 3);
  auto vs = algebra::VariableSet::spectral(4);
  CHECK(fx.psi[0] == algebra::parse_polynomial(
                         "(hb+z1-z2)*(hb+z3-z4)*(2*hb+z1-z2)*(2*hb+z3-z4)", vs));
  CHECK(fx.tableaux == combinatorics::enumerate_tableaux({2, 2, 2, 2}, {2, 2, 2, 2}));
  // top-left entry of R_1 is the normalization factor for min = 2
  CHECK(fx.r13.get(0, 0) == rmatrix::normalization_factor(2, 2));
  CHECK(fx.r2.get(2, 2) == rmatrix::normalization_factor(2, 2));
  CHECK(fx.r13.get(0, 1).is_zero());
  CHECK(fx.rho == std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(fx.equations.size() == 3);
  CHECK(fx.deformed.size() == 3);
  CHECK(fx.components.size() == 3);
  CHECK(fx.deformed_component.alpha ==
        std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  CHECK(fx.deformed_component.quadrics.size() == 3);
  CHECK(fx.deformed_component.limit.size() == 2);
  CHECK_THROWS_AS(load_appendix("/nonexistent"), PreconditionError);
}

TEST_CASE("appendix Psi, R-matrices and rho") {
  const auto &fx = fixture();
  require_pass(check_appendix_exchange(fx));
  require_pass(check_appendix_solve(fx));
  require_pass(check_appendix_relations(fx));
  require_pass(check_appendix_wheel(fx));
  require_pass(check_appendix_cyclicity(fx));
}

TEST_CASE("appendix R_1 = R_3 follows from rho^2 = 1") {
  const auto &fx = fixture();
  auto rho = appendix_rho(fx);
  CHECK((rho * rho).is_identity());
  auto v = appendix_psi(fx);
  auto r1 = rmatrix::solve_rmatrix_from_exchange(v.entries, v.entries, v.vars, 0);
  auto r3 = rmatrix::solve_rmatrix_from_exchange(v.entries, v.entries, v.vars, 2);
  CHECK(r1 == r3);
}

TEST_CASE("appendix qKZ") { require_pass(check_appendix_qkz(fixture())); }

TEST_CASE("appendix slice") {
  const auto &fx = fixture();
  require_pass(check_appendix_equations(fx));
  require_pass(check_appendix_deformed(fx));
  require_pass(check_appendix_components(fx));
  require_pass(check_appendix_multidegrees(fx));
  require_pass(check_appendix_labels(fx, 20240601));
}

TEST_CASE("appendix fused Psi against the fixture") {
  // fused fundamental Psi, restricted to the first component label
  auto f = psi::fuse_psi(psi::build_psi_fundamental(4, {2, 2, 2, 2}), {2, 2, 2, 2});
  CHECK(f.size() == 90);
  CHECK(f.at({{1, 2}, {1, 2}, {3, 4}, {3, 4}}) == fixture().psi[0]);
}

TEST_CASE("appendix suite and negative controls") {
  const auto &fx = fixture();
  auto reports = run_appendix_suite(fx);
  REQUIRE(reports.size() == 8);
  for (const auto &r : reports) {
    CAPTURE(r.check);
    CAPTURE(r.witness);
    CHECK(r.status == "pass");
  }
  for (const std::string what : {"rho", "deformed", "equations"}) {
    CAPTURE(what);
    auto bad = run_appendix_suite(perturb_fixture(fx, what));
    std::size_t failed = 0;
    for (const auto &r : bad)
      failed += r.status == "fail";
    CHECK(failed == 1);
  }
  CHECK_THROWS_AS(perturb_fixture(fx, "nothing"), PreconditionError);
  auto j = to_json(reports[0]);
  CHECK(j["schema"] == 1);
  CHECK(j["status"] == "pass");
}

TEST_CASE("k=2 components from the slice and the recurrence") {
  auto comps = load_components(std::filesystem::path(QKZ_DATA_DIR) / "k2m4" / "components.txt");
  auto big = slice_component_psi(2, {2, 2}, {1, 1, 1, 1}, {2, 2, 0, 0}, comps);
  auto vs = algebra::VariableSet::spectral(4);
  REQUIRE(big.size() == 2);
  // hand-computed: products of the constraint weights
  CHECK(big.entries[0] == algebra::parse_polynomial("(hb+z1-z2)*(hb+z3-z4)", vs));
  CHECK(big.entries[1] == algebra::parse_polynomial("(hb+z2-z3)*(2*hb+z1-z4)", vs));
  require_pass(check_k2_recurrence(comps));
  require_pass(psi::check_degree(big));
  // one component dropped: the tableau count no longer matches
  CHECK_THROWS_AS(slice_component_psi(2, {2, 2}, {1, 1, 1, 1}, {2, 2, 0, 0}, {comps[0]}),
                  ConsistencyError);
  // an entry scaled by hbar breaks the recurrence
  auto small = psi::component_psi(2, {1, 1}, {1, 1}, {algebra::VariableSet::spectral(2).constant(1)});
  auto bad = big;
  bad.entries[1] = bad.entries[1] * algebra::Rational(2);
  CHECK(!psi::check_recurrence(bad, small, 0).pass);
}
