#pragma once

#include <vector>

#include "qkz/algebra/errors.hpp"
#include "qkz/algebra/variables.hpp"
#include "qkz/rmatrix/rf_matrix.hpp"

namespace qkz::rmatrix {

/// Too few independent components to pin down the matrix.
class UnderdeterminedError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// No matrix of the required form satisfies the exchange relation.
class InconsistentError : public ConsistencyError {
public:
  using ConsistencyError::ConsistencyError;
};

/// Solves swap_{slot}(psi_swapped) = R(z_slot - z_{slot+1}) psi for R, where
/// psi is the vector for m and psi_swapped the one for m with entries slot,
/// slot+1 exchanged (the same vector when m is homogeneous). Slot is 0-based.
/// The result lives in the spectral context (z1, z2, h) with z = z1 - z2 and
/// maps the basis of psi to the basis of psi_swapped.
RFMatrix solve_rmatrix_from_exchange(const std::vector<Polynomial> &psi,
                                     const std::vector<Polynomial> &psi_swapped,
                                     const algebra::VariableSet &vars, std::size_t slot);

} // namespace qkz::rmatrix
