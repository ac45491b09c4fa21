#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qkz/algebra/errors.hpp"
#include "qkz/algebra/variables.hpp"
#include "qkz/rmatrix/rf_matrix.hpp"

namespace qkz::rmatrix {

using Subset = std::vector<int>;
using SubsetPair = std::pair<Subset, Subset>;

/// Context of every spectral operator: (z1, z2, h) with z = z1 - z2.
const algebra::VariableSet &spectral_context();
/// z + c*h in the spectral context (c counts units of hbar/2).
Polynomial spectral_arg(int c_half_hbar = 0);

/// All subsets of {1..k} of the given size, in lexicographic order.
std::vector<Subset> subsets(int k, int size);

/// Operator Lambda^a C^k (x) Lambda^b C^k -> Lambda^b C^k (x) Lambda^a C^k
/// depending on z and hbar. Source pairs (S, T) with |S| = a, |T| = b;
/// target pairs (T', S'). The matrix is indexed [target][source].
struct ROperator {
  int k = 0, a = 0, b = 0;
  std::vector<SubsetPair> source, target;
  RFMatrix matrix;

  std::size_t source_index(const SubsetPair &p) const;
  std::size_t target_index(const SubsetPair &p) const;
  /// Rows of "label: entry" text, skipping zeros.
  std::string str() const;
  /// Entries vanish unless source and target have equal content.
  bool weight_preserving() const;
};

/// (hbar - z P) / (hbar + z) on C^k (x) C^k.
ROperator fundamental_rcheck(int k);

/// prod_{a=1}^{min(mi,mj)} (a hbar - z) / (a hbar + z)
RationalFunction normalization_factor(int mi, int mj);

/// Fused operator built from a*b fundamental ones. The wedge basis vector of
/// S embeds as the signed sum over orderings of S; spectral parameters in a
/// block of size a are z + (2p - a - 1) hbar/2. The image is projected back
/// onto the wedge basis (a failure to stay inside raises ConsistencyError).
/// No rescaling is applied: the highest-weight eigenvalue is
/// fused_eigenvalue(a, b), which is normalization_factor(a, a) when a = b.
ROperator fused_rcheck(int k, int a, int b);

/// (-1)^{min |a-b|} prod_{j=1}^{min(a,b)} (c_j hbar - z) / (c_j hbar + z)
/// with c_j = |a-b|/2 + j.
RationalFunction fused_eigenvalue(int a, int b);

} // namespace qkz::rmatrix
