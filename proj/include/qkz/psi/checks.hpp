#pragma once

#include <vector>

#include "qkz/psi/psi.hpp"
#include "qkz/rmatrix/exchange.hpp"

namespace qkz::psi {

using rmatrix::CheckResult;
using rmatrix::RFamily;
using rmatrix::RFMatrix;

/// swap_slot(psi_swapped) = R_slot(z_slot - z_{slot+1}) psi, slot 0-based;
/// psi_swapped is the vector for m with m_slot, m_{slot+1} exchanged.
CheckResult check_exchange(const PsiVector &psi, const PsiVector &psi_swapped,
                           const RFamily &family, std::size_t slot);
/// Homogeneous m: the vector is its own partner.
CheckResult check_exchange(const PsiVector &psi, const RFamily &family, std::size_t slot);

/// Specialize the slots in `positions` (increasing, 0-based) to
/// zeta_1 = z, zeta_{t+1} = zeta_t + (n_t + n_{t+1})/2 hbar with n_t = m at
/// that slot, and require every entry to vanish. Needs sum n_t > k.
CheckResult check_wheel(const PsiVector &psi, const std::vector<std::size_t> &positions);
/// All increasing position sets of the given size.
std::vector<CheckResult> check_wheel_all(const PsiVector &psi, std::size_t r);

/// Recurrence for component-basis vectors. `big` has the letters p..p+r-1
/// (0-based slot p) inserted with sizes n, sum n = k; `small` is the vector
/// for the remaining slots with lambda reduced by one column of height k.
CheckResult check_recurrence(const PsiVector &big, const PsiVector &small, std::size_t p);

/// Integer matrix of the rotation operator: for component bases from
/// promotion, for standard bases the signed rotation of labels.
RFMatrix rho_for(const PsiVector &psi, const PsiVector &psi_rotated);

/// psi_rotated(z_2, ..., z_N, z_1 + (k+1) hbar) = rho psi(z_1, ..., z_N).
CheckResult check_cyclicity(const PsiVector &psi, const PsiVector &psi_rotated,
                            const RFMatrix &rho);

/// Sign s_beta in the standard-basis rotation: entry beta of the rotated
/// vector picks the label with the last block moved to the front.
int standard_rotation_sign(const SubsetSequence &label);

/// S_i built from exchange moves and one cyclicity move (slot i, 0-based)
/// for homogeneous m, checked against Psi(z + s e_i) = S_i Psi(z) and
/// against the composite routed the other way around the circle.
CheckResult qkz_step(const PsiVector &psi, const RFamily &family, const RFMatrix &rho,
                     std::size_t i);
/// The composite matrix alone (route through slot 1).
RFMatrix qkz_composite(const PsiVector &psi, const RFamily &family, const RFMatrix &rho,
                       std::size_t i);

/// Homogeneity and degree sum lambda_a(lambda_a - 1)/2 of every entry.
CheckResult check_degree(const PsiVector &psi);

} // namespace qkz::psi
