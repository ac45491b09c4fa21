#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qkz/algebra/polynomial.hpp"
#include "qkz/algebra/qmatrix.hpp"
#include "qkz/algebra/variables.hpp"
#include "qkz/combinatorics/tableau.hpp"

namespace qkz::slice {

using algebra::Polynomial;
using algebra::VariableSet;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Free entry of the slice: last row of block i, column c (1-based) of block j.
struct Coordinate {
  std::size_t i = 0, j = 0; // 0-based block indices
  int c = 1;
  std::size_t row = 0, col = 0; // position in the M x M matrix
  std::string name;
};

/// Transverse slice x_m + T'_m, optionally restricted.
///
/// Variables of `vars`: the coordinates first, then parameters t1..tk and
/// e1..ek used by deformed equations (k = `params`, possibly 0).
class SliceModel {
public:
  enum class Part { full, strict_upper, upper };

  const std::vector<int> &m() const { return m_; }
  std::size_t M() const { return M_; }
  std::size_t N() const { return m_.size(); }
  Part part() const { return part_; }
  const std::vector<Coordinate> &coords() const { return coords_; }
  const VariableSet &vars() const { return vars_; }
  /// Spectral context z_1..z_N, h of the torus weights.
  const VariableSet &weight_vars() const { return weight_vars_; }
  int params() const { return params_; }

  std::optional<std::size_t> find(std::size_t i, std::size_t j, int c) const;
  std::size_t block_start(std::size_t i) const { return starts_.at(i); }

  /// z_i - z_j + (m_i + m_j - 2(c - 1)) hbar/2
  Polynomial weight(const Coordinate &x) const;
  Polynomial weight(std::size_t coord_index) const { return weight(coords_.at(coord_index)); }
  /// Torus weight of a polynomial homogeneous in the grading; nullopt if
  /// not homogeneous. Parameters t_a carry weight hbar, e_a weight a*hbar.
  std::optional<Polynomial> weight_of(const Polynomial &p) const;

  /// Generic matrix x_m + sum of coordinates.
  PolyMatrix matrix() const;
  /// N x N matrix of the coordinates with column index c (zero elsewhere).
  PolyMatrix column_matrix(int c) const;

  Polynomial t(int a) const;
  Polynomial e(int a) const;

  friend SliceModel build_slice(const std::vector<int> &m, int params);
  /// Same slice with a subset of its coordinates.
  static SliceModel rebuild(const SliceModel &base, std::vector<Coordinate> coords, Part part);

private:
  std::vector<int> m_;
  std::vector<std::size_t> starts_;
  std::size_t M_ = 0;
  Part part_ = Part::full;
  int params_ = 0;
  std::vector<Coordinate> coords_;
  VariableSet vars_, weight_vars_;
};

SliceModel build_slice(const std::vector<int> &m, int params = 0);
/// Coordinates of blocks i < j only.
SliceModel intersect_with_n(const SliceModel &model);
/// Coordinates of blocks i <= j.
SliceModel intersect_with_b(const SliceModel &model);

PolyMatrix matmul(const PolyMatrix &a, const PolyMatrix &b);
PolyMatrix matpow(const PolyMatrix &a, unsigned e);
PolyMatrix identity_matrix(std::size_t n, std::size_t nvars);

struct Relation {
  std::string name;
  Polynomial poly;
  /// Matrix position for entry relations (0-based); unset for minors.
  std::optional<std::pair<std::size_t, std::size_t>> entry;
};

struct EquationSet {
  std::vector<Relation> relations;
};

/// Nilpotency conditions for Jordan type bounded by ell: entries of X^L for
/// rectangular ell (nonzero parts all equal to L), else (r+1)-minors of X^s
/// with r = sum_i max(ell_i - s, 0). Zero relations are dropped.
EquationSet emit_equations(const SliceModel &model, const std::vector<int> &ell);
/// Entries of prod_a (X - t_a) = sum_j (-1)^j e_j X^{L-j}, for rectangular
/// ell; the model must carry L parameters.
EquationSet emit_deformed_equations(const SliceModel &model, const std::vector<int> &ell);
/// Replace e_a by the elementary symmetric polynomials of t_1..t_k.
Polynomial expand_elementary(const SliceModel &model, const Polynomial &p);

/// Product of the weights of the listed coordinates.
Polynomial linear_component_multidegree(const SliceModel &model,
                                        const std::vector<std::size_t> &vanishing);
/// Product of the weights of homogeneous constraints (a complete
/// intersection is assumed).
Polynomial complete_intersection_multidegree(const SliceModel &model,
                                             const std::vector<Polynomial> &constraints);

/// v = -r / c, with c, r free of v.
struct Elimination {
  std::size_t var;
  Polynomial c, r;
  bool forced = false;
};

struct MembershipReport {
  bool pass = false;
  std::string witness;
  std::vector<Elimination> eliminations;
  std::size_t implied_constraints = 0;
  std::size_t forced = 0;
  std::size_t free_coordinates = 0;
};

/// Eliminate one coordinate per constraint (clearing denominators), then
/// require every equation to vanish identically. With `allow_forcing`,
/// after each constraint, residual equations linear in a coordinate with a
/// coefficient free of coordinates force that coordinate, unless a later
/// constraint mentions it. Constraints reduced to zero by earlier steps
/// count as implied.
MembershipReport verify_component_membership(const SliceModel &model,
                                             const std::vector<Polynomial> &constraints,
                                             const EquationSet &equations,
                                             bool allow_forcing = false);

/// Random rational point of the constrained locus: free coordinates uniform
/// in [lo, hi], parameters as given, eliminated ones solved back.
std::optional<std::vector<algebra::Rational>>
sample_point(const SliceModel &model, const MembershipReport &report, std::mt19937_64 &rng,
             int lo = -99, int hi = 99);
algebra::QMatrix evaluate_matrix(const SliceModel &model,
                                 const std::vector<algebra::Rational> &point);

struct LabelSample {
  std::vector<combinatorics::Tableau> labels;
  std::size_t matches = 0;
};
/// Spaltenstein labels of `samples` sampled points.
LabelSample sample_labels(const SliceModel &model, const MembershipReport &report,
                          const combinatorics::Tableau &expected, std::uint64_t seed,
                          std::size_t samples = 10);

} // namespace qkz::slice
