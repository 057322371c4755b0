#include "macir/likelihood.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "macir/errors.hpp"

namespace macir {

namespace {

void require_finite(const std::vector<double>& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw NonFiniteInput(std::string(what) + " contains a non-finite value");
        }
    }
}

/// One step of the innovations recursion on the banded MA(q) autocovariance.
/// Fills rows[t % q] with c_{t,1}..c_{t,min(t,q)} (index j-1 holds c_{t,j})
/// using the previous rows in the ring buffer, appends v_t to v, and returns
/// it. Coefficients for lags beyond q vanish identically, so only the last q
/// rows are ever needed.
double innovations_step(const std::vector<double>& gamma, std::size_t q, std::size_t t,
                        std::vector<std::vector<double>>& rows, std::vector<double>& v) {
    const std::size_t lo = t > q ? t - q : 0;
    std::vector<double>& row_t = rows[t % q];
    for (std::size_t k = lo; k < t; ++k) {
        double acc = gamma[t - k];
        const std::vector<double>& row_k = rows[k % q];
        for (std::size_t j = lo; j < k; ++j) {
            acc -= row_k[k - j - 1] * row_t[t - j - 1] * v[j];
        }
        row_t[t - k - 1] = acc / v[k];
    }
    double vt = gamma[0];
    for (std::size_t j = lo; j < t; ++j) {
        const double c = row_t[t - j - 1];
        vt -= c * c * v[j];
    }
    if (!(vt > 0.0)) {
        throw DegenerateVariance("innovations recursion: prediction variance <= 0");
    }
    v.push_back(vt);
    return vt;
}

double concentrated(double sigma2_hat, double log_det_term, std::size_t n) {
    const double dn = static_cast<double>(n);
    return -0.5 * dn * (std::log(2.0 * std::numbers::pi * sigma2_hat) + 1.0) -
           0.5 * log_det_term;
}

}  // namespace

AutocovarianceSequence ma_autocovariance(const MaCoefficients& theta, std::size_t max_lag) {
    require_finite(theta.coeffs, "theta");
    const std::size_t q = theta.order();

    std::vector<double> psi(q + 1);
    psi[0] = 1.0;
    for (std::size_t j = 1; j <= q; ++j) {
        psi[j] = -theta.coeffs[j - 1];
    }

    AutocovarianceSequence acv;
    acv.gammas.assign(max_lag + 1, 0.0);
    for (std::size_t k = 0; k <= std::min(max_lag, q); ++k) {
        double g = 0.0;
        for (std::size_t j = 0; j + k <= q; ++j) {
            g += psi[j] * psi[j + k];
        }
        acv.gammas[k] = g;
    }
    return acv;
}

LikelihoodValue innovations_loglikelihood(const TimeSeries& z, const MaCoefficients& theta) {
    const std::size_t n = z.size();
    const std::size_t q = theta.order();
    if (n == 0) {
        throw std::invalid_argument("innovations_loglikelihood: empty series");
    }
    if (q == 0) {
        throw std::invalid_argument("innovations_loglikelihood: order must be >= 1");
    }
    require_finite(z.values, "z");
    require_finite(theta.coeffs, "theta");

    const std::vector<double> gamma = ma_autocovariance(theta, q).gammas;

    std::vector<std::vector<double>> rows(q, std::vector<double>(q, 0.0));
    std::vector<double> v;
    v.reserve(n);
    v.push_back(gamma[0]);  // gamma_0 = 1 + sum theta_i^2 > 0

    std::vector<double> w(n, 0.0);  // one-step prediction residuals
    w[0] = z.values[0];
    for (std::size_t t = 1; t < n; ++t) {
        innovations_step(gamma, q, t, rows, v);
        const std::vector<double>& row_t = rows[t % q];
        double zhat = 0.0;
        for (std::size_t j = 1; j <= std::min(t, q); ++j) {
            zhat += row_t[j - 1] * w[t - j];
        }
        w[t] = z.values[t] - zhat;
    }

    double ss = 0.0;
    double log_det = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        ss += w[t] * w[t] / v[t];
        log_det += std::log(v[t]);
    }
    const double sigma2 = ss / static_cast<double>(n);
    if (sigma2 == 0.0) {
        throw ZeroSeries("innovations_loglikelihood: innovation variance estimate is zero");
    }

    return LikelihoodValue{concentrated(sigma2, log_det, n), sigma2, log_det};
}

LikelihoodValue dense_loglikelihood(const TimeSeries& z, const MaCoefficients& theta) {
    const std::size_t n = z.size();
    if (n == 0) {
        throw std::invalid_argument("dense_loglikelihood: empty series");
    }
    if (n > 2000) {
        throw std::invalid_argument("dense_loglikelihood: series too long for the dense path");
    }
    require_finite(z.values, "z");
    require_finite(theta.coeffs, "theta");

    const std::vector<double> gamma = ma_autocovariance(theta, n - 1).gammas;
    Eigen::MatrixXd cov(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cov(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                gamma[i > j ? i - j : j - i];
        }
    }

    const Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
        throw NotPositiveDefinite("dense_loglikelihood: covariance factorization failed");
    }

    const Eigen::Map<const Eigen::VectorXd> zv(z.values.data(), static_cast<Eigen::Index>(n));
    const Eigen::VectorXd solved = llt.solve(zv);
    const double sigma2 = zv.dot(solved) / static_cast<double>(n);
    if (sigma2 == 0.0) {
        throw ZeroSeries("dense_loglikelihood: innovation variance estimate is zero");
    }

    double log_det = 0.0;
    const auto& lmat = llt.matrixLLT();
    for (Eigen::Index i = 0; i < lmat.rows(); ++i) {
        log_det += 2.0 * std::log(lmat(i, i));
    }

    return LikelihoodValue{concentrated(sigma2, log_det, n), sigma2, log_det};
}

std::vector<double> innovations_variances(const MaCoefficients& theta, std::size_t n) {
    if (n == 0 || theta.order() == 0) {
        throw std::invalid_argument("innovations_variances: need n >= 1 and order >= 1");
    }
    require_finite(theta.coeffs, "theta");

    const std::size_t q = theta.order();
    const std::vector<double> gamma = ma_autocovariance(theta, q).gammas;
    std::vector<std::vector<double>> rows(q, std::vector<double>(q, 0.0));
    std::vector<double> v;
    v.reserve(n);
    v.push_back(gamma[0]);
    for (std::size_t t = 1; t < n; ++t) {
        innovations_step(gamma, q, t, rows, v);
    }
    return v;
}

}  // namespace macir
