#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "macir/likelihood.hpp"
#include "macir/reparam.hpp"
#include "macir/types.hpp"

namespace macir {

struct FitOptions {
    int q = 1;                      ///< model order, >= 1
    double epsilon = kDefaultBoundaryEpsilon;
    int n_starts = 5;               ///< optimizer restarts
    double f_tol = 1e-9;            ///< simplex spread convergence tolerance
    int max_iters = 0;              ///< iteration cap per start; 0 means 1000 * q
    std::uint64_t seed = 0;         ///< seed for the random restart points
};

struct FitResult {
    PartialParams zeta_hat;
    MaCoefficients theta_hat;       ///< always b_transform(zeta_hat)
    double sigma2_hat = 0.0;
    double loglik = 0.0;
    BoundaryReport boundary;
    bool converged = false;
    long n_evals = 0;
    int start_index = -1;           ///< which restart produced the winner
};

/// Maximizes the concentrated log-likelihood of an MA(q) model over the
/// CLOSED unit cube in the transformed parameters, via a multi-start
/// Nelder-Mead search in which every proposed point is clamped
/// componentwise to [-1, 1] before evaluation. The clamp lets the simplex
/// settle exactly on the boundary, so noninvertible-boundary optima are
/// reported as exact |zeta_i| = 1 rather than near-misses.
///
/// Start points: the origin, the +/-0.5 single-coordinate patterns, then
/// seeded uniform draws from [-0.9, 0.9]^q until n_starts points exist
/// (the list is truncated to n_starts when the deterministic points already
/// exceed it). Ties across starts within 1e-12 in log-likelihood resolve to
/// the lowest start index, so identical inputs give identical results.
///
/// Throws TooShortSeries when n <= q, AllStartsFailed when no start ever
/// produced a finite likelihood (e.g. a constant-zero series).
FitResult fit_ma(const TimeSeries& z, const FitOptions& opts);

/// Concentrated log-likelihood profile along one zeta coordinate, the other
/// coordinates held at their fitted values (for q = 1 there are none and no
/// fit is run). A profile rising monotonically into an endpoint is the
/// visual signature of a boundary estimate.
///
/// Throws IndexOutOfRange for a bad coordinate; grid values must lie in [-1, 1].
std::vector<std::pair<double, double>> profile_curve(const TimeSeries& z, int q, int coordinate,
                                                     const std::vector<double>& grid,
                                                     const FitOptions& opts = FitOptions{});

}  // namespace macir
