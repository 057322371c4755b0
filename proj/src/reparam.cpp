#include "macir/reparam.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
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

}  // namespace

MaCoefficients b_transform(const PartialParams& zeta) {
    const std::size_t q = zeta.order();
    if (q == 0) {
        throw std::invalid_argument("b_transform: order must be >= 1");
    }
    require_finite(zeta.zetas, "zeta");
    for (double z : zeta.zetas) {
        if (std::fabs(z) > 1.0) {
            throw NotInClosedRegion("b_transform: |zeta_i| > 1 lies outside the closed cube");
        }
    }

    // theta[i-1] holds theta_{i,k} for the current level k.
    std::vector<double> theta(q, 0.0);
    std::vector<double> prev(q, 0.0);
    theta[0] = zeta.zetas[0];
    for (std::size_t k = 2; k <= q; ++k) {
        const double zk = zeta.zetas[k - 1];
        std::copy(theta.begin(), theta.begin() + static_cast<std::ptrdiff_t>(k - 1), prev.begin());
        for (std::size_t i = 1; i < k; ++i) {
            theta[i - 1] = prev[i - 1] - zk * prev[k - i - 1];
        }
        theta[k - 1] = zk;
    }
    return MaCoefficients(std::move(theta));
}

PseudoInverseResult b_pseudo_inverse(const MaCoefficients& theta, double epsilon) {
    const std::size_t q = theta.order();
    if (q == 0) {
        throw std::invalid_argument("b_pseudo_inverse: order must be >= 1");
    }
    require_finite(theta.coeffs, "theta");

    std::vector<double> work = theta.coeffs;  // work[i-1] = theta_{i,k}
    std::vector<double> lower(q, 0.0);
    std::vector<double> zeta(q, 0.0);
    bool boundary_hit = false;

    for (std::size_t k = q; k >= 1; --k) {
        double zk = work[k - 1];  // theta_{k,k}
        if (std::fabs(zk) > 1.0 + kDivisionGuard) {
            throw NotInClosedRegion(
                "b_pseudo_inverse: coefficients lie outside the closed invertible region");
        }
        if (std::fabs(zk) >= 1.0 - kDivisionGuard) {
            // Guard band around the boundary: snap to +/-1 and zero the
            // remaining levels instead of dividing by 1 - zk^2.
            zk = std::copysign(1.0, zk);
            boundary_hit = true;
        }
        zeta[k - 1] = zk;
        if (k == 1) {
            break;
        }
        if (boundary_hit) {
            std::fill(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(k - 1), 0.0);
        } else {
            const double denom = 1.0 - zk * zk;
            for (std::size_t i = 1; i < k; ++i) {
                lower[i - 1] = (work[i - 1] + zk * work[k - i - 1]) / denom;
            }
            std::copy(lower.begin(), lower.begin() + static_cast<std::ptrdiff_t>(k - 1),
                      work.begin());
        }
    }

    PartialParams zp(std::move(zeta));
    BoundaryReport report = boundary_flags(zp, epsilon);
    return PseudoInverseResult{std::move(zp), std::move(report)};
}

BoundaryReport boundary_flags(const PartialParams& zeta, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("boundary_flags: epsilon must be > 0");
    }
    require_finite(zeta.zetas, "zeta");

    BoundaryReport report;
    report.epsilon = epsilon;
    report.flags.reserve(zeta.order());
    for (double z : zeta.zetas) {
        const bool flag = std::fabs(1.0 - std::fabs(z)) < epsilon;
        report.flags.push_back(flag);
        report.on_boundary = report.on_boundary || flag;
    }
    return report;
}

double min_root_modulus(const MaCoefficients& theta) {
    require_finite(theta.coeffs, "theta");

    // Effective degree: trailing zero coefficients do not contribute roots.
    std::size_t d = theta.order();
    while (d > 0 && theta.coeffs[d - 1] == 0.0) {
        --d;
    }
    if (d == 0) {
        return std::numeric_limits<double>::infinity();
    }
    if (d == 1) {
        return std::fabs(1.0 / theta.coeffs[0]);
    }

    // Roots of 1 - theta_1 z - ... - theta_d z^d via the companion matrix of
    // the monic polynomial z^d + (theta_{d-1}/theta_d) z^{d-1} + ... - 1/theta_d.
    const double lead = theta.coeffs[d - 1];
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d),
                                                      static_cast<Eigen::Index>(d));
    for (std::size_t i = 1; i < d; ++i) {
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    }
    companion(0, static_cast<Eigen::Index>(d - 1)) = 1.0 / lead;  // -c_0
    for (std::size_t j = 1; j < d; ++j) {
        companion(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(d - 1)) =
            -theta.coeffs[j - 1] / lead;  // -c_j
    }

    const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    double min_mod = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        min_mod = std::min(min_mod, std::abs(solver.eigenvalues()[i]));
    }
    return min_mod;
}

}  // namespace macir
