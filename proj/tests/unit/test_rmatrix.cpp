#include "doctest.h"

#include "qkz/algebra/io.hpp"
#include "qkz/rmatrix/exchange.hpp"

using namespace qkz;
using namespace qkz::rmatrix;
using algebra::RationalFunction;

namespace {

RationalFunction rf(const std::string &text) {
  algebra::SymbolTable sym;
  const auto &vs = spectral_context();
  sym.emplace("z", vs.z(1) - vs.z(2));
  return algebra::parse_rational(text, vs, sym);
}

RFMatrix at_zero(const RFMatrix &m) {
  const auto &vs = spectral_context();
  std::vector<std::optional<algebra::Polynomial>> img{vs.z(2), vs.z(2), vs.var(2)};
  return m.substitute(img, vs.size());
}

} // namespace

TEST_CASE("fundamental R-matrix entries") {
  ROperator r = fundamental_rcheck(3);
  CHECK(r.matrix.rows() == 9);
  CHECK(r.weight_preserving());
  auto aa = r.source_index({{2}, {2}});
  CHECK(r.matrix.get(aa, aa) == rf("(hb - z)/(hb + z)"));
  auto s12 = r.source_index({{1}, {2}});
  CHECK(r.matrix.get(r.target_index({{1}, {2}}), s12) == rf("hb/(hb + z)"));
  CHECK(r.matrix.get(r.target_index({{2}, {1}}), s12) == rf("-z/(hb + z)"));
  CHECK(at_zero(r.matrix).is_identity());
}

TEST_CASE("normalization factor") {
  CHECK(normalization_factor(1, 1) == rf("(hb - z)/(hb + z)"));
  CHECK(normalization_factor(2, 3) == rf("(hb - z)*(2*hb - z)/((hb + z)*(2*hb + z))"));
  const auto &vs = spectral_context();
  std::vector<std::optional<algebra::Polynomial>> neg{vs.z(2), vs.z(1), vs.var(2)};
  auto f = normalization_factor(2, 2);
  CHECK((f * f.substitute(neg, vs.size())).is_constant());
}

TEST_CASE("fused operators") {
  for (int k = 2; k <= 4; ++k)
    CHECK(fused_rcheck(k, 1, 1).matrix == fundamental_rcheck(k).matrix);
  for (int k = 2; k <= 4; ++k)
    for (int a = 1; a < k; ++a)
      for (int b = 1; b < k; ++b) {
        CAPTURE(k);
        CAPTURE(a);
        CAPTURE(b);
        ROperator r = fused_rcheck(k, a, b);
        CHECK(r.weight_preserving());
        Subset low_a, low_b;
        for (int x = 1; x <= a; ++x)
          low_a.push_back(x);
        for (int x = 1; x <= b; ++x)
          low_b.push_back(x);
        auto hw = r.matrix.get(r.target_index({low_b, low_a}), r.source_index({low_a, low_b}));
        CHECK(hw == fused_eigenvalue(a, b));
        if (a == b) {
          CHECK(hw == normalization_factor(a, b));
          CHECK(at_zero(r.matrix).is_identity());
        }
      }
}

TEST_CASE("fused eigenvalue formula") {
  CHECK(fused_eigenvalue(2, 2) == rf("(hb - z)*(2*hb - z)/((hb + z)*(2*hb + z))"));
  CHECK(fused_eigenvalue(1, 2) == rf("-(3*hb - 2*z)/(3*hb + 2*z)"));
  CHECK(fused_eigenvalue(3, 1) == rf("(2*hb - z)/(2*hb + z)"));
}

TEST_CASE("relations for the fundamental family") {
  for (int k = 2; k <= 4; ++k) {
    StandardFamily fam(k, std::nullopt);
    for (const auto &res : verify_relations(fam, {1, 1, 1})) {
      CAPTURE(res.check);
      CAPTURE(res.witness);
      CHECK(res.pass);
    }
  }
  StandardFamily fam(2, std::nullopt);
  for (const auto &res : verify_relations(fam, {1, 1, 1, 1})) {
    CAPTURE(res.check);
    CHECK(res.pass);
  }
}

TEST_CASE("relations for fused families") {
  StandardFamily fam3(3, std::nullopt);
  for (const auto &m : std::vector<std::vector<int>>{{2, 1, 1}, {1, 2, 2}, {2, 1, 2}})
    for (const auto &res : verify_relations(fam3, m)) {
      CAPTURE(res.check);
      CAPTURE(res.witness);
      CHECK(res.pass);
    }
  StandardFamily fam4(4, std::vector<int>{2, 2, 1, 1});
  for (const auto &res : verify_relations(fam4, {2, 2, 2})) {
    CAPTURE(res.check);
      CAPTURE(res.witness);
    CHECK(res.pass);
  }
}
