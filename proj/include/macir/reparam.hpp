#pragma once

#include "macir/types.hpp"

namespace macir {

/// Default tolerance for declaring |zeta_i| = 1.
inline constexpr double kDefaultBoundaryEpsilon = 1e-6;

/// Guard band for the 1 - theta_kk^2 division in the pseudo-inverse:
/// levels with |theta_kk| >= 1 - kDivisionGuard take the zero branch.
inline constexpr double kDivisionGuard = 1e-12;

/// Forward transform from the closed unit cube onto the closed invertible
/// region. Triangular recursion: theta_{k,k} = zeta_k and
/// theta_{i,k} = theta_{i,k-1} - zeta_k * theta_{k-i,k-1}, i = 1..k-1,
/// with theta_i = theta_{i,q}.
///
/// Throws NonFiniteInput on NaN/Inf, NotInClosedRegion if any |zeta_i| > 1.
MaCoefficients b_transform(const PartialParams& zeta);

struct PseudoInverseResult {
    PartialParams zeta;
    BoundaryReport boundary;
};

/// Pseudo-inverse of b_transform, defined on the whole closed invertible
/// region. Runs the recursion
///   theta_{i,k-1} = (theta_{i,k} + theta_{k,k} * theta_{k-i,k}) / (1 - theta_{k,k}^2)
/// from level q down, except that once a level hits the boundary
/// (|theta_{k,k}| >= 1 - kDivisionGuard) every lower-level coefficient is
/// set to zero. On the open interior this is the exact inverse; boundary
/// coefficient vectors map to boundary zeta. Levels inside the guard band
/// are snapped to exactly +/-1 so the result always satisfies |zeta_i| <= 1.
///
/// The boundary report is evaluated at `epsilon`.
///
/// Throws NotInClosedRegion when a level coefficient exceeds 1 + kDivisionGuard
/// in magnitude (input outside the closed region), NonFiniteInput on NaN/Inf.
PseudoInverseResult b_pseudo_inverse(const MaCoefficients& theta,
                                     double epsilon = kDefaultBoundaryEpsilon);

/// Per-coordinate boundary test: flag_i = (|1 - |zeta_i|| < epsilon).
/// Throws std::invalid_argument if epsilon <= 0, NonFiniteInput on NaN/Inf.
BoundaryReport boundary_flags(const PartialParams& zeta, double epsilon);

/// Smallest root modulus of 1 - theta_1 z - ... - theta_q z^q, computed
/// from companion-matrix eigenvalues. Returns +infinity for the zero
/// coefficient vector (the polynomial is the constant 1). Value > 1 means
/// strictly invertible; a value of 1 (up to root-finder accuracy) means the
/// coefficients sit on the noninvertible boundary.
///
/// Independent of b_transform / b_pseudo_inverse; used as an oracle for them.
double min_root_modulus(const MaCoefficients& theta);

}  // namespace macir
