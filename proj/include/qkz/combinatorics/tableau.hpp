#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qkz/algebra/qmatrix.hpp"
#include "qkz/combinatorics/quiver.hpp"

namespace qkz::combinatorics {

/// alpha_i as a sorted list of rows (1-based).
using SubsetSequence = std::vector<std::vector<int>>;

/// Filling of the diagram of lambda: rows strictly increasing, columns
/// weakly increasing, letter i used m_i times. Letters are 1-based.
class Tableau {
public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

  const std::vector<std::vector<int>> &rows() const { return rows_; }
  Partition shape() const;
  /// Validate against (lambda, m); throws PreconditionError with the reason.
  void validate(const std::vector<int> &lambda, const std::vector<int> &m) const;
  /// Sub-shape filled by letters <= h.
  Partition shape_upto(int h) const;
  /// Row index (1-based) of each occurrence of letter i.
  std::vector<int> rows_of(int letter) const;
  std::string str() const;

  friend bool operator==(const Tableau &, const Tableau &) = default;
  friend auto operator<=>(const Tableau &, const Tableau &) = default;

private:
  std::vector<std::vector<int>> rows_;
};

/// All tableaux of shape lambda and content m, ordered lexicographically by
/// their subset sequences.
std::vector<Tableau> enumerate_tableaux(const std::vector<int> &lambda,
                                        const std::vector<int> &m);

/// Multiplicity of L_lambda in the tensor product of the L_{omega_{m_i}} by
/// iterated Pieri rule for vertical strips, compared against the tableau
/// count. Throws ConsistencyError on disagreement.
std::int64_t multiplicity_check(const QuiverData &q);
std::int64_t pieri_multiplicity(int k, const std::vector<int> &lambda,
                                const std::vector<int> &m);

SubsetSequence phi_map(const Tableau &t);
/// All subset sequences (alpha_i of size m_i) with row content lambda, in
/// lexicographic order; the standard weight basis.
std::vector<SubsetSequence> enumerate_subset_sequences(const std::vector<int> &lambda,
                                                       const std::vector<int> &m);
std::string to_string(const SubsetSequence &s);

/// Promotion of a tableau of rectangular shape with k rows: evacuate the
/// letters 1, shift labels down, refill with N. Content moves from m to
/// (m_2, ..., m_N, m_1).
Tableau promotion(const Tableau &t, int N);

/// rho_alpha^beta = eps^{m_1} delta_{alpha, promotion(beta)}, with
/// eps = (-1)^{M/k - 1}; rows indexed by `target`, columns by `source`.
std::vector<std::vector<int>> rho_matrix(const std::vector<Tableau> &source,
                                         const std::vector<Tableau> &target,
                                         int m1, int M, int k);
int rho_epsilon(int M, int k);

/// Label a point of the tensor-product variety by the Jordan types of its
/// leading principal submatrices of sizes m_1 + ... + m_h.
Tableau spaltenstein_label(const algebra::QMatrix &X, const std::vector<int> &m);
/// Jordan type (block sizes, decreasing) of a nilpotent matrix.
Partition jordan_type(const algebra::QMatrix &X);

/// Chain-wise dominance of the Jordan types: for every h the Jordan type of
/// the prefix of a (conjugate of its shape) is dominated by that of b.
/// Degenerate points of a component get labels that are smaller.
bool tableau_dominated_by(const Tableau &a, const Tableau &b, int N);

} // namespace qkz::combinatorics
