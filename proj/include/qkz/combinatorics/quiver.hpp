#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qkz::combinatorics {

using Partition = std::vector<int>;

/// Conjugate partition (trailing zeros dropped).
Partition conjugate(const Partition &p);
/// Dominance order on partitions of the same size: a <= b.
bool dominated_by(const Partition &a, const Partition &b);

/// Combinatorial data of a type A_{k-1} quiver with framing w and gauge v.
struct QuiverData {
  int k = 0;
  std::vector<int> w, v;
  /// GL(k) lifts with mu_k = 0; lambda = mu - sum_a v_a alpha_a.
  std::vector<int> mu, lambda;
  int N = 0, M = 0;
  /// Column heights of mu's diagram, in the order chosen for the slice.
  std::vector<int> m;
  /// Column heights of lambda's diagram, padded with zeros to length N.
  std::vector<int> ell;

  std::string fingerprint() const;
};

/// Derive all data from (k, w, v). `m_order`, if given, must be a permutation
/// of the column heights of mu; the default lists them weakly decreasing.
QuiverData weights_from_quiver(int k, const std::vector<int> &w,
                               const std::vector<int> &v,
                               const std::optional<std::vector<int>> &m_order = {});

/// Same data from a GL(k) weight lambda and a sequence m with entries in
/// 1..k (the recurrence allows columns of full height k).
QuiverData weights_from_lambda(int k, const std::vector<int> &lambda,
                               const std::vector<int> &m);

/// sum_a lambda_a (lambda_a - 1) / 2
int codimension(const std::vector<int> &lambda);

} // namespace qkz::combinatorics
