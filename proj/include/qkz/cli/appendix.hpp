#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qkz/cli/fixtures.hpp"
#include "qkz/psi/psi.hpp"
#include "qkz/rmatrix/exchange.hpp"

namespace qkz::cli {

using rmatrix::CheckResult;

struct Report {
  std::string check, instance;
  std::string status; // pass | fail | skipped
  std::string witness;
  double seconds = 0;
};
nlohmann::json to_json(const Report &r);

/// Component-basis vector of the printed multidegrees.
psi::PsiVector appendix_psi(const AppendixFixture &fx);
/// Printed R_1 = R_3 and R_2 as a family on slots 0, 1, 2.
rmatrix::FixedFamily appendix_family(const AppendixFixture &fx);
rmatrix::RFMatrix appendix_rho(const AppendixFixture &fx);

CheckResult check_appendix_exchange(const AppendixFixture &fx);
CheckResult check_appendix_solve(const AppendixFixture &fx);
CheckResult check_appendix_relations(const AppendixFixture &fx);
CheckResult check_appendix_wheel(const AppendixFixture &fx);
/// Printed rho, the rho from promotion, and eps^{m_1} = +1.
CheckResult check_appendix_cyclicity(const AppendixFixture &fx);
CheckResult check_appendix_qkz(const AppendixFixture &fx);
/// X^4 on the slice against the printed relations, block by block.
CheckResult check_appendix_equations(const AppendixFixture &fx);
CheckResult check_appendix_deformed(const AppendixFixture &fx);
/// Printed components of Z_0 and the printed component of Z_t.
CheckResult check_appendix_components(const AppendixFixture &fx);
/// Products of constraint weights against the printed multidegrees.
CheckResult check_appendix_multidegrees(const AppendixFixture &fx);
/// Spaltenstein labels of sampled points of each component; at least
/// `needed` of `samples` must match and the others must be dominated.
CheckResult check_appendix_labels(const AppendixFixture &fx, std::uint64_t seed,
                                  std::size_t samples = 10, std::size_t needed = 9);

/// Component-basis Psi from slice components of Z_0: each component must
/// lie in the orbit-closure equations with the expected dimension, and its
/// entry is the product of its constraint weights. Components are matched
/// to enumerate_tableaux(lambda, m) by label.
psi::PsiVector slice_component_psi(int k, const std::vector<int> &lambda,
                                   const std::vector<int> &m, const std::vector<int> &ell,
                                   const std::vector<ComponentFixture> &components);
/// Recurrence for k = 2, m = (1,1,1,1) -> (1,1), every insertion slot.
CheckResult check_k2_recurrence(const std::vector<ComponentFixture> &components);

/// Copy of the fixture with one printed item altered: "rho" (one entry of
/// rho), "deformed" (sign of e_4 in the first deformed relation) or
/// "equations" (first relation). Each is read by exactly one suite check.
AppendixFixture perturb_fixture(AppendixFixture fx, const std::string &what);

/// equations, components, multidegrees, rmatrix, relations, cyclicity,
/// wheel, deformed
std::vector<Report> run_appendix_suite(const AppendixFixture &fx);

} // namespace qkz::cli
