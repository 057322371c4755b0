#pragma once

#include <cstddef>
#include <vector>

#include "macir/types.hpp"

namespace macir {

/// Autocovariances gamma_0..gamma_m of an MA(q) process at unit innovation
/// variance; gamma_k = 0 for k > q.
struct AutocovarianceSequence {
    std::vector<double> gammas;

    std::size_t max_lag() const { return gammas.empty() ? 0 : gammas.size() - 1; }
};

/// Concentrated (profile) Gaussian log-likelihood pieces. The innovation
/// variance is concentrated out in closed form, so the likelihood of a
/// coefficient vector is a function of the series alone:
///   concentrated_loglik = -(n/2) (log(2 pi sigma2_hat) + 1) - log_det_term / 2.
struct LikelihoodValue {
    double concentrated_loglik = 0.0;
    double sigma2_hat = 0.0;
    double log_det_term = 0.0;  // sum_t log v_{t-1} at unit innovation variance
};

/// gamma_k = sum_{j=0}^{q-k} psi_j psi_{j+k} with psi_0 = 1, psi_j = -theta_j.
/// Throws NonFiniteInput.
AutocovarianceSequence ma_autocovariance(const MaCoefficients& theta, std::size_t max_lag);

/// Exact Gaussian log-likelihood via the innovations recursion on the banded
/// MA(q) autocovariance. Valid on the closed invertible region, boundary
/// included, since only autocovariances enter. O(n q^2) time, O(q^2) extra
/// space.
///
/// Throws DegenerateVariance if a prediction variance drops to <= 0,
/// ZeroSeries if the innovation variance estimate is exactly zero.
LikelihoodValue innovations_loglikelihood(const TimeSeries& z, const MaCoefficients& theta);

/// Reference implementation: builds the full n x n covariance matrix,
/// Cholesky-factorizes it and computes the same concentrated quantities.
/// Cubic in n (capped at n <= 2000); kept for verifying the banded kernel.
///
/// Throws NotPositiveDefinite if the factorization fails.
LikelihoodValue dense_loglikelihood(const TimeSeries& z, const MaCoefficients& theta);

/// One-step prediction variances v_0..v_{n-1} at unit innovation variance,
/// from the same recursion as innovations_loglikelihood.
std::vector<double> innovations_variances(const MaCoefficients& theta, std::size_t n);

}  // namespace macir
