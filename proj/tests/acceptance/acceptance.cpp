// Runs the twelve acceptance criteria, one PASS/FAIL line each.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qkz/algebra/errors.hpp"
#include "qkz/cli/appendix.hpp"
#include "qkz/combinatorics/quiver.hpp"
#include "qkz/combinatorics/tableau.hpp"
#include "qkz/psi/checks.hpp"
#include "qkz/rmatrix/rcheck.hpp"

using namespace qkz;
using rmatrix::CheckResult;

namespace {

const std::filesystem::path kData = QKZ_DATA_DIR;

CheckResult ok(std::string name) { return {std::move(name), true, ""}; }

CheckResult first_failure(std::string name, const std::vector<CheckResult> &parts) {
  for (const auto &p : parts)
    if (!p.pass)
      return {std::move(name), false, p.check + ": " + p.witness};
  return ok(std::move(name));
}

const cli::AppendixFixture &fixture() {
  static const cli::AppendixFixture fx = cli::load_appendix(kData / "appendix");
  return fx;
}

// Weakly decreasing sequences of length k with the given sum.
std::vector<std::vector<int>> weights(int k, int sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (int(cur.size()) == k) {
      if (left == 0)
        out.push_back(cur);
      return;
    }
    for (int x = std::min(left, cap); x >= 0; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(sum, sum);
  return out;
}

// Weakly decreasing sequences with parts in 1..cap and the given sum.
std::vector<std::vector<int>> block_sizes(int sum, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int top) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = std::min(left, top); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(sum, cap);
  return out;
}

CheckResult c1() { return cli::check_appendix_exchange(fixture()); }

CheckResult c2() { return cli::check_appendix_solve(fixture()); }

CheckResult c3() {
  std::vector<CheckResult> parts;
  for (int k = 2; k <= 4; ++k) {
    rmatrix::StandardFamily fam(k, std::nullopt);
    for (const auto &r : rmatrix::verify_relations(fam, {1, 1, 1}))
      parts.push_back(r);
    // far commutation needs four slots; one weight space per k keeps it small
    rmatrix::StandardFamily fam4(k, k == 2 ? std::vector<int>{2, 2} : k == 3 ? std::vector<int>{2, 1, 1} : std::vector<int>{1, 1, 1, 1});
    parts.push_back(rmatrix::verify_comm(fam4, {1, 1, 1, 1}, 0, 2));
  }
  parts.push_back(cli::check_appendix_relations(fixture()));
  return first_failure("relations", parts);
}

CheckResult c4() {
  std::vector<CheckResult> parts{cli::check_appendix_wheel(fixture())};
  auto psi = psi::build_psi_fundamental(2, {2, 2});
  parts.push_back(psi::check_wheel(psi, {0, 1, 2}));
  parts.push_back(psi::check_wheel(psi, {1, 2, 3}));
  return first_failure("wheel", parts);
}

CheckResult c5() { return cli::check_appendix_cyclicity(fixture()); }

CheckResult c6() {
  std::vector<CheckResult> parts{cli::check_appendix_qkz(fixture())};
  auto psi = psi::build_psi_fundamental(2, {2, 2});
  rmatrix::StandardFamily fam(2, std::vector<int>{2, 2});
  auto rho = psi::rho_for(psi, psi);
  for (std::size_t i = 0; i < 4; ++i)
    parts.push_back(psi::qkz_step(psi, fam, rho, i));
  return first_failure("qKZ", parts);
}

CheckResult c7() {
  auto fused = psi::fuse_psi(psi::build_psi_fundamental(4, {2, 2, 2, 2}), {2, 2, 2, 2});
  if (fused.size() != 90)
    return {"fusion", false, "expected 90 labels"};
  const auto &entry = fused.at({{1, 2}, {1, 2}, {3, 4}, {3, 4}});
  if (!(entry == fixture().psi[0]))
    return {"fusion", false, "entry differs from the first printed multidegree"};
  rmatrix::StandardFamily fam(4, std::vector<int>{2, 2, 2, 2});
  std::vector<CheckResult> parts;
  for (std::size_t s = 0; s < 3; ++s)
    parts.push_back(psi::check_exchange(fused, fam, s));
  return first_failure("fusion", parts);
}

// Padding lambda with zeros (a larger k) leaves every label and entry unchanged,
// so each nonzero partition is built once; the identity is checked for M <= 6.
CheckResult c8() {
  std::vector<CheckResult> parts;
  for (int M = 1; M <= 8; ++M)
    for (const auto &mu : block_sizes(M, M)) {
      if (mu.size() > 4)
        continue;
      const int len = int(mu.size());
      auto lambda = mu;
      lambda.resize(std::size_t(std::max(2, len)), 0);
      auto psi = psi::build_psi_fundamental(int(lambda.size()), lambda);
      parts.push_back(psi::check_degree(psi));
      for (int k = int(lambda.size()) + 1; M <= 6 && k <= 4; ++k) {
        auto padded = lambda;
        padded.resize(std::size_t(k), 0);
        auto other = psi::build_psi_fundamental(k, padded);
        if (other.basis != psi.basis || other.entries != psi.entries)
          return {"degree", false, "zero padding changed the vector"};
      }
      // fused vectors: block sizes are bounded by the number of distinct letters
      const int k = std::min(4, len + 1);
      lambda.resize(std::size_t(std::max(k, len)), 0);
      for (const auto &m : block_sizes(M, std::min(k - 1, len))) {
        if (m.size() == std::size_t(M))
          continue;
        try {
          combinatorics::weights_from_lambda(k, lambda, m);
        } catch (const PreconditionError &) {
          continue;
        }
        parts.push_back(psi::check_degree(psi::fuse_psi(psi, m)));
      }
    }
  return first_failure("degree", parts);
}

CheckResult c9() {
  const auto &fx = fixture();
  return first_failure("slice", {cli::check_appendix_equations(fx), cli::check_appendix_deformed(fx),
                                 cli::check_appendix_components(fx),
                                 cli::check_appendix_multidegrees(fx)});
}

CheckResult c10() { return cli::check_appendix_labels(fixture(), 20240601, 10, 9); }

CheckResult c11() {
  for (int k = 2; k <= 4; ++k)
    for (int M = 1; M <= 10; ++M)
      for (const auto &m : block_sizes(M, k - 1))
        for (const auto &lambda : weights(k, M)) {
          combinatorics::QuiverData q;
          try {
            q = combinatorics::weights_from_lambda(k, lambda, m);
          } catch (const PreconditionError &) {
            continue;
          }
          auto n = combinatorics::multiplicity_check(q); // throws on disagreement
          if (std::int64_t(combinatorics::enumerate_tableaux(lambda, m).size()) != n)
            return {"counts", false, q.fingerprint()};
        }
  auto appendix = combinatorics::weights_from_quiver(4, {0, 4, 0}, {2, 4, 2});
  if (combinatorics::multiplicity_check(appendix) != 3)
    return {"counts", false, "appendix instance does not give 3"};
  return ok("counts");
}

CheckResult c12() {
  return cli::check_k2_recurrence(cli::load_components(kData / "k2m4" / "components.txt"));
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<CheckResult()>>> criteria{
      {"appendix fixture self-consistency", c1},
      {"R-matrix solve reproduces the printed matrices", c2},
      {"YBE, unitarity, far commutation", c3},
      {"wheel conditions", c4},
      {"cyclicity with the printed rho", c5},
      {"qKZ step, route independent", c6},
      {"fusion reproduces the first multidegree", c7},
      {"degree sweep k<=4, M<=8", c8},
      {"slice equations, deformation, components", c9},
      {"Spaltenstein labels of sampled points", c10},
      {"tableau counts k<=4, M<=10", c11},
      {"recurrence k=2, M=4 -> 2", c12}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = criteria[i].second();
    } catch (const std::exception &e) {
      r = {criteria[i].first, false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << (i + 1) << ": " << criteria[i].first;
    if (!r.pass)
      std::cout << " -- " << r.witness;
    std::cout << std::endl;
    std::cerr << "  criterion " << (i + 1) << " took " << s << " s" << std::endl;
  }
  return failed ? 1 : 0;
}
