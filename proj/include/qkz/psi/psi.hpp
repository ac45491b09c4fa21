#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qkz/algebra/polynomial.hpp"
#include "qkz/algebra/variables.hpp"
#include "qkz/combinatorics/tableau.hpp"

namespace qkz::psi {

using algebra::Polynomial;
using algebra::VariableSet;
using combinatorics::SubsetSequence;
using combinatorics::Tableau;

/// Basis-labelled vector of polynomials in z_1..z_N, hbar.
///
/// Standard-basis vectors fill `basis`; component-basis vectors fill
/// `tableaux`. Exactly one of the two is non-empty.
struct PsiVector {
  int k = 0;
  std::vector<int> lambda, m;
  VariableSet vars;
  std::vector<SubsetSequence> basis;
  std::vector<Tableau> tableaux;
  std::vector<Polynomial> entries;

  std::size_t size() const { return entries.size(); }
  bool is_component_basis() const { return !tableaux.empty(); }
  std::string label(std::size_t i) const;
  /// Index of a standard label; throws PreconditionError if absent.
  std::size_t index_of(const SubsetSequence &s) const;
  const Polynomial &at(const SubsetSequence &s) const { return entries[index_of(s)]; }
  std::size_t nonzero_count() const;
};

/// Weakly increasing label (1^{lambda_1} 2^{lambda_2} ...) and the product of
/// (hbar + z_i - z_j) over pairs i < j carrying the same letter.
std::pair<SubsetSequence, Polynomial> extreme_component(const std::vector<int> &lambda);

/// Standard-basis Psi for m = (1, ..., 1), seeded by the extreme component
/// and propagated by the exchange relation. Every descent is used and must
/// agree; adjacent equal letters are checked for divisibility.
PsiVector build_psi_fundamental(int k, const std::vector<int> &lambda);

/// Specialize blocks of variables to arithmetic progressions
/// z_i + (2p - m_i - 1) hbar/2 and contract with antisymmetrizers. With
/// `normalized` the sum over orderings is divided by prod m_i!.
PsiVector fuse_psi(const PsiVector &psi1, const std::vector<int> &m, bool normalized = true);

/// Component-basis vector with the given entries, tableaux from
/// enumerate_tableaux(lambda, m).
PsiVector component_psi(int k, const std::vector<int> &lambda, const std::vector<int> &m,
                        std::vector<Polynomial> entries);

/// Sum of lambda_a (lambda_a - 1)/2.
int expected_degree(const std::vector<int> &lambda);

nlohmann::json to_json(const PsiVector &psi);
PsiVector psi_from_json(const nlohmann::json &j);

} // namespace qkz::psi
