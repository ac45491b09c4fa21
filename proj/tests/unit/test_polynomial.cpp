#include <doctest.h>

#include <map>
#include <random>

#include "qkz/algebra/io.hpp"
#include "qkz/algebra/linear_form.hpp"
#include "qkz/algebra/polynomial.hpp"
#include "qkz/algebra/rational_function.hpp"
#include "qkz/algebra/univariate.hpp"
#include "qkz/algebra/variables.hpp"

using namespace qkz::algebra;

namespace {

Polynomial P(const std::string &s, const VariableSet &vs) { return parse_polynomial(s, vs); }
RationalFunction R(const std::string &s, const VariableSet &vs) { return parse_rational(s, vs); }

// Naive expansion on exponent maps, independent of the library's merge logic.
std::map<std::vector<int>, Rational> naive_product(const Polynomial &a, const Polynomial &b) {
  std::map<std::vector<int>, Rational> out;
  for (const auto &s : a.terms())
    for (const auto &t : b.terms()) {
      std::vector<int> e(a.nvars());
      for (std::size_t v = 0; v < a.nvars(); ++v)
        e[v] = int(s.mono[v]) + int(t.mono[v]);
      out[e] += s.coeff * t.coeff;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<std::vector<int>, Rational> as_map(const Polynomial &p) {
  std::map<std::vector<int>, Rational> out;
  for (const auto &t : p.terms()) {
    std::vector<int> e(p.nvars());
    for (std::size_t v = 0; v < p.nvars(); ++v)
      e[v] = t.mono[v];
    out[e] = t.coeff;
  }
  return out;
}

Polynomial random_poly(std::mt19937 &rng, std::size_t nvars, int max_deg, int nterms) {
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 3), ex(0, max_deg);
  std::vector<Polynomial::Term> terms;
  for (int k = 0; k < nterms; ++k) {
    Monomial m(nvars);
    int left = max_deg;
    for (std::size_t v = 0; v < nvars && left > 0; ++v) {
      int e = std::min(left, ex(rng) / 2);
      m.set(v, unsigned(e));
      left -= e;
    }
    Rational c(coef(rng), den(rng));
    c.canonicalize();
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

LinearForm random_form(std::mt19937 &rng, std::size_t nz) {
  std::uniform_int_distribution<int> idx(0, int(nz) - 1), sh(-4, 4);
  int i = idx(rng), j = idx(rng);
  if (i == j)
    return LinearForm{};
  return LinearForm::make(sh(rng), i, j).first;
}

} // namespace

TEST_CASE("addition cancels and multiplication expands") {
  auto vs = VariableSet::spectral(2);
  CHECK(P("z1 + hb/2", vs) + P("z1 - hb/2", vs) == P("2*z1", vs));
  CHECK(P("z1 - z2", vs) * P("z1 + z2", vs) == P("z1^2 - z2^2", vs));
  Polynomial a = P("hb + z1 - z2", vs), b = P("2*hb + z1 - z2", vs);
  Polynomial ab = a * b;
  CHECK(ab.size() == 6);
  CHECK(as_map(ab) == naive_product(a, b));
  CHECK(ab.is_homogeneous());
  CHECK(ab.degree() == 2);
}

TEST_CASE("mismatched contexts are rejected") {
  auto v2 = VariableSet::spectral(2), v3 = VariableSet::spectral(3);
  CHECK_THROWS_AS(P("z1", v2) + P("z1", v3), qkz::ContextError);
  CHECK_THROWS_AS(P("z1", v2) * P("z1", v3), qkz::ContextError);
}

TEST_CASE("exact division by linear forms") {
  auto vs = VariableSet::spectral(2);
  auto f = LinearForm::make(0, 0, 1).first;
  CHECK(exact_divide(P("z1^2 - z2^2", vs), f) == P("z1 + z2", vs));
  try {
    exact_divide(P("hb + z1 - z2", vs), f);
    FAIL("expected non-divisibility");
  } catch (const NotDivisibleError &e) {
    CHECK(e.remainder() == P("hb", vs));
  }
  CHECK(exact_divide(P("hb*z1 + hb^2", vs), LinearForm{}) == P("2*z1 + 2*hb", vs));
}

TEST_CASE("substitution and swapping") {
  auto vs = VariableSet::spectral(2);
  std::map<std::size_t, Polynomial> m{{1, P("z1 + hb", vs)}};
  CHECK(P("z1 - z2", vs).substitute(m) == P("-hb", vs));
  std::map<std::size_t, Polynomial> m2{{0, P("z2 - hb/2", vs)}, {1, P("z2 + hb/2", vs)}};
  CHECK(P("hb + z1 - z2", vs).substitute(m2).is_zero());
  CHECK(P("z1 - z2", vs).swap(0, 1) == P("z2 - z1", vs));
  CHECK(P("z1 + z2", vs).swap(0, 1) == P("z1 + z2", vs));
}

TEST_CASE("rational functions") {
  auto vs = VariableSet::spectral(2);
  SymbolTable sym{{"z", P("z1 - z2", vs)}};
  auto a = parse_rational("(hb - z)/(hb + z)", vs, sym);
  auto b = parse_rational("(hb + z)/(hb - z)", vs, sym);
  CHECK(a * b == RationalFunction::constant(vs.size(), 1));
  CHECK(a.inverse() == b);
  std::vector<std::optional<Polynomial>> img{P("z2", vs), std::nullopt, std::nullopt};
  CHECK(a.substitute(img, vs.size()) == RationalFunction::constant(vs.size(), 1));
  CHECK_THROWS_AS(RationalFunction(Polynomial(vs.size())).inverse(), qkz::PreconditionError);
  auto c = parse_rational("(z1^2 - z2^2)/(z1 - z2)", vs);
  CHECK(c.is_polynomial());
  CHECK(c.numerator() == P("z1 + z2", vs));
  auto d = a + b;
  CHECK(d * (R("hb + z1 - z2", vs) * R("hb - z1 + z2", vs)) ==
        R("(hb - z1 + z2)^2 + (hb + z1 - z2)^2", vs));
}

TEST_CASE("linear factorization") {
  auto vs = VariableSet::spectral(4);
  auto p = P("3*(hb + z1 - z2)*(2*hb + z3 - z1)*hb*(z2 - z4)", vs);
  auto f = factor_linear(p);
  REQUIRE(f);
  CHECK(f->forms.size() == 4);
  Polynomial back = Polynomial::constant(vs.size(), f->constant);
  for (const auto &form : f->forms)
    back *= form.to_polynomial(vs.size());
  CHECK(back == p);
  CHECK_FALSE(factor_linear(P("z1^2 + z2^2", vs)));
  CHECK_FALSE(factor_linear(P("z1", vs)));
}

TEST_CASE("univariate gcd and roots") {
  UPoly a({-2, 1}), b({3, 1}), c({1, 2});
  auto g = gcd(a * b, a * c);
  CHECK(g == a);
  auto roots = (a * b * c).rational_roots();
  CHECK(roots.size() == 3);
  URatFun x(UPoly::x());
  auto r = (x + URatFun(UPoly::constant(1))) / x;
  CHECK(r * x == x + URatFun(UPoly::constant(1)));
}

TEST_CASE("text and JSON round trips") {
  auto vs = VariableSet::spectral(3);
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = random_poly(rng, vs.size(), 4, 6);
    CHECK(parse_polynomial(to_text(p, vs), vs) == p);
    CHECK(polynomial_from_json(to_json(p, vs), vs) == p);
  }
  CHECK(to_text(P("hb + z1 - z2", vs), vs) == "z1 - z2 + hb");
  CHECK(to_text(P("hb/2*z3", vs), vs) == "1/2*z3*hb");
  auto r = parse_rational("(hb - z1 + z3)/((hb + z1 - z3)*(2*hb + z1 - z2))", vs);
  CHECK(parse_rational(to_text(r, vs), vs) == r);
  CHECK(rational_from_json(to_json(r, vs), vs) == r);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 4;
    Polynomial a = random_poly(rng, n, 4, 4), b = random_poly(rng, n, 4, 4),
               c = random_poly(rng, n, 4, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(as_map(a * b) == naive_product(a, b));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("division undoes multiplication by a linear form") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t nz = 2 + trial % 3;
    Polynomial p = random_poly(rng, nz + 1, 4, 5);
    LinearForm f = random_form(rng, nz);
    CHECK(exact_divide(p * f.to_polynomial(nz + 1), f) == p);
  }
}

TEST_CASE("swap commutes with relabelled substitution and keeps homogeneity") {
  std::mt19937 rng(99);
  auto vs = VariableSet::spectral(3);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial p = random_poly(rng, vs.size(), 4, 5);
    // sigma: z1 -> z2 + hb, applied before or after swapping z1 and z2
    std::map<std::size_t, Polynomial> s{{0, P("z2 + hb", vs)}};
    std::map<std::size_t, Polynomial> s_swapped{{1, P("z1 + hb", vs)}};
    CHECK(p.substitute(s).swap(0, 1) == p.swap(0, 1).substitute(s_swapped));
    CHECK(p.swap(0, 1).swap(0, 1) == p);
    Polynomial h = P("(hb + z1 - z2)*(z3 - z1 + 3*hb/2)*z2", vs);
    CHECK(h.swap(1, 2).is_homogeneous());
    std::map<std::size_t, Polynomial> shift{{2, P("z3 + 5*hb/2", vs)}};
    CHECK(h.substitute(shift).is_homogeneous());
  }
}

TEST_CASE("composition of substitutions") {
  auto vs = VariableSet::spectral(3);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial p = random_poly(rng, vs.size(), 4, 5);
    std::map<std::size_t, Polynomial> s1{{0, P("z2 + hb", vs)}}, s2{{1, P("z3 - hb/2", vs)}};
    std::map<std::size_t, Polynomial> composed{{0, P("z3 + hb/2", vs)}, {1, P("z3 - hb/2", vs)}};
    CHECK(p.substitute(s1).substitute(s2) == p.substitute(composed));
  }
}
