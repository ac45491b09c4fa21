#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "qkz/combinatorics/quiver.hpp"
#include "qkz/combinatorics/tableau.hpp"

using namespace qkz::combinatorics;
using qkz::algebra::QMatrix;

namespace {

// Weight multiplicity of content mu in the tensor product of exterior powers:
// number of subset sequences with |alpha_i| = m_i and content mu.
std::int64_t weight_multiplicity(const std::vector<int> &mu, const std::vector<int> &m,
                                 std::size_t i = 0) {
  if (std::any_of(mu.begin(), mu.end(), [](int x) { return x < 0; }))
    return 0;
  if (i == m.size())
    return std::all_of(mu.begin(), mu.end(), [](int x) { return x == 0; }) ? 1 : 0;
  std::int64_t total = 0;
  int k = int(mu.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    if (__builtin_popcount(unsigned(mask)) != m[i])
      continue;
    std::vector<int> rest = mu;
    for (int a = 0; a < k; ++a)
      if (mask & (1 << a))
        --rest[std::size_t(a)];
    total += weight_multiplicity(rest, m, i + 1);
  }
  return total;
}

// Weyl's alternating sum over S_k.
std::int64_t weyl_multiplicity(const std::vector<int> &lambda, const std::vector<int> &m) {
  int k = int(lambda.size());
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    int inv = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        inv += perm[std::size_t(a)] > perm[std::size_t(b)];
    // w(lambda + delta) - delta
    std::vector<int> mu(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) {
      int src = perm[std::size_t(a)];
      mu[std::size_t(a)] = lambda[std::size_t(src)] + (k - 1 - src) - (k - 1 - a);
    }
    total += (inv % 2 ? -1 : 1) * weight_multiplicity(mu, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Brute force over ballot sequences for k = 2, m = (1,...,1).
int ballot_count(int n) {
  int count = 0;
  for (int mask = 0; mask < (1 << (2 * n)); ++mask) {
    int ones = 0, ok = 1;
    for (int i = 0; i < 2 * n && ok; ++i) {
      ones += (mask >> i) & 1 ? 1 : -1;
      ok = ones >= 0;
    }
    count += ok && ones == 0;
  }
  return count;
}

std::vector<std::vector<int>> partitions(int n, int max_parts, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (int(cur.size()) == max_parts)
      return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

} // namespace

TEST_CASE("weights from quiver data") {
  auto q = weights_from_quiver(4, {2, 1, 3}, {1, 0, 1});
  CHECK(q.mu == std::vector<int>{6, 4, 3, 0});
  CHECK(q.lambda == std::vector<int>{5, 5, 2, 1});
  CHECK(q.N == 6);
  CHECK(q.M == 13);
  auto m = q.m;
  std::sort(m.rbegin(), m.rend());
  CHECK(m == std::vector<int>{3, 3, 3, 2, 1, 1});
  CHECK(q.ell == std::vector<int>{4, 3, 2, 2, 2, 0});

  auto app = weights_from_quiver(4, {0, 4, 0}, {2, 4, 2});
  CHECK(app.lambda == std::vector<int>{2, 2, 2, 2});
  CHECK(app.m == std::vector<int>{2, 2, 2, 2});
  CHECK(app.ell == std::vector<int>{4, 4, 0, 0});
  CHECK(std::accumulate(app.ell.begin(), app.ell.end(), 0) == app.M);

  auto hw = weights_from_quiver(2, {5}, {0});
  CHECK(hw.lambda == std::vector<int>{5, 0});
  CHECK(enumerate_tableaux(hw.lambda, hw.m).size() == 1);

  CHECK_THROWS_AS(weights_from_quiver(3, {1, 0}, {0, 1}), qkz::PreconditionError);
  CHECK_THROWS_AS(weights_from_quiver(4, {2, 1, 3}, {1, 0, 1}, std::vector<int>{3, 3, 2, 2, 1, 1}),
                  qkz::PreconditionError);
}

TEST_CASE("appendix tableaux and phi") {
  auto ts = enumerate_tableaux({2, 2, 2, 2}, {2, 2, 2, 2});
  REQUIRE(ts.size() == 3);
  CHECK(ts[0].str() == "(12)(12)(34)(34)");
  CHECK(ts[1].str() == "(12)(13)(24)(34)");
  CHECK(ts[2].str() == "(13)(13)(24)(24)");
  CHECK(to_string(phi_map(ts[0])) == "({1,2},{1,2},{3,4},{3,4})");
  CHECK(to_string(phi_map(ts[1])) == "({1,2},{1,3},{2,4},{3,4})");
  for (const auto &t : ts)
    t.validate({2, 2, 2, 2}, {2, 2, 2, 2});
  CHECK(enumerate_tableaux({1, 1, 1}, {3}).size() == 1);
  CHECK(to_string(phi_map(enumerate_tableaux({1, 1, 1}, {3})[0])) == "({1,2,3})");
  CHECK(enumerate_tableaux({2, 2}, {1, 1, 1, 1}).size() == std::size_t(ballot_count(2)));
  CHECK(multiplicity_check(weights_from_lambda(2, {2, 2}, {1, 1, 1, 1})) == 2);
  CHECK(multiplicity_check(weights_from_quiver(4, {0, 4, 0}, {2, 4, 2})) == 3);
  CHECK(enumerate_subset_sequences({2, 2, 2, 2}, {2, 2, 2, 2}).size() == 90);
}

TEST_CASE("tableau counts against Weyl character oracle") {
  for (int k = 2; k <= 4; ++k)
    for (int M = 1; M <= 8; ++M)
      for (const auto &msorted : partitions(M, M, k - 1))
        for (const auto &lam : partitions(M, k, M)) {
          std::vector<int> lambda = lam;
          lambda.resize(std::size_t(k), 0);
          QuiverData q;
          try {
            q = weights_from_lambda(k, lambda, msorted);
          } catch (const qkz::PreconditionError &) {
            CHECK(weyl_multiplicity(lambda, msorted) == 0);
            CHECK(pieri_multiplicity(k, lambda, msorted) == 0);
            continue;
          }
          auto n = multiplicity_check(q);
          CHECK(n == weyl_multiplicity(lambda, msorted));
          for (const auto &t : enumerate_tableaux(lambda, msorted)) {
            auto a = phi_map(t);
            std::vector<int> content(std::size_t(k), 0);
            for (std::size_t i = 0; i < a.size(); ++i) {
              CHECK(int(a[i].size()) == msorted[i]);
              for (int r : a[i])
                ++content[std::size_t(r) - 1];
            }
            CHECK(content == lambda);
          }
          std::vector<int> rev(msorted.rbegin(), msorted.rend());
          CHECK(std::int64_t(enumerate_tableaux(lambda, rev).size()) == n);
        }
}

TEST_CASE("promotion on the appendix basis") {
  auto ts = enumerate_tableaux({2, 2, 2, 2}, {2, 2, 2, 2});
  CHECK(promotion(ts[0], 4) == ts[2]);
  CHECK(promotion(ts[1], 4) == ts[1]);
  CHECK(promotion(ts[2], 4) == ts[0]);
  auto rho = rho_matrix(ts, ts, 2, 8, 4);
  CHECK(rho == std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(rho_epsilon(8, 4) == -1);
  for (const auto &t : ts) {
    Tableau p = t;
    for (int i = 0; i < 4; ++i)
      p = promotion(p, 4);
    CHECK(p == t);
  }
}

TEST_CASE("promotion preserves tableau invariants") {
  for (int k = 2; k <= 4; ++k)
    for (int c = 1; c <= 3; ++c) {
      std::vector<int> lambda(std::size_t(k), c);
      for (const auto &msorted : partitions(k * c, k * c, k - 1)) {
        std::vector<int> m = msorted;
        std::vector<int> rotated(m.begin() + 1, m.end());
        rotated.push_back(m[0]);
        for (const auto &t : enumerate_tableaux(lambda, m)) {
          Tableau p = promotion(t, int(m.size()));
          p.validate(lambda, rotated);
          Tableau q = t;
          for (std::size_t i = 0; i < m.size(); ++i)
            q = promotion(q, int(m.size()));
          CHECK(q == t);
        }
      }
    }
}

TEST_CASE("Spaltenstein labels") {
  QMatrix zero = qkz::algebra::qmatrix_zero(2, 2);
  CHECK(spaltenstein_label(zero, {1, 1}).str() == "(12)");
  QMatrix j = qkz::algebra::qmatrix_zero(2, 2);
  j[0][1] = 1;
  CHECK(spaltenstein_label(j, {1, 1}).str() == "(1)(2)");
  CHECK(jordan_type(j) == Partition{2});
  QMatrix bad = qkz::algebra::qmatrix_identity(2);
  CHECK_THROWS_AS(jordan_type(bad), qkz::PreconditionError);
  auto ts = enumerate_tableaux({2, 2, 2, 2}, {2, 2, 2, 2});
  CHECK(tableau_dominated_by(ts[0], ts[1], 4));
  CHECK(tableau_dominated_by(ts[1], ts[2], 4));
  CHECK_FALSE(tableau_dominated_by(ts[2], ts[0], 4));
}
