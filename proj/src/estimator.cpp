#include "macir/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "macir/errors.hpp"
#include "macir/rng.hpp"

namespace macir {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Concentrated log-likelihood as a function of the clamped zeta vector.
/// Degenerate evaluations count as -inf so a start can move on.
class Objective {
  public:
    explicit Objective(const TimeSeries& z) : z_(z) {}

    double operator()(const std::vector<double>& zeta) {
        ++evals_;
        try {
            const MaCoefficients theta = b_transform(PartialParams(zeta));
            return innovations_loglikelihood(z_, theta).concentrated_loglik;
        } catch (const ZeroSeries&) {
            return kNegInf;
        } catch (const DegenerateVariance&) {
            return kNegInf;
        }
    }

    long evals() const { return evals_; }

  private:
    const TimeSeries& z_;
    long evals_ = 0;
};

void clamp_to_cube(std::vector<double>& x) {
    for (double& c : x) {
        c = std::clamp(c, -1.0, 1.0);
    }
}

struct SimplexOutcome {
    std::vector<double> x;
    double f = kNegInf;
    bool converged = false;
};

/// Nelder-Mead ascent on [-1,1]^q. Every candidate vertex is clamped into
/// the cube before evaluation and stored clamped, so the simplex itself
/// lives in the closed cube and can sit exactly on a face.
SimplexOutcome nelder_mead_box(Objective& f, std::vector<double> start, double step,
                               double f_tol, int max_iters) {
    const std::size_t q = start.size();
    clamp_to_cube(start);

    std::vector<std::vector<double>> xs;
    xs.reserve(q + 1);
    xs.push_back(start);
    for (std::size_t i = 0; i < q; ++i) {
        std::vector<double> v = start;
        v[i] += (v[i] + step <= 1.0) ? step : -step;
        xs.push_back(std::move(v));
    }
    std::vector<double> fs(q + 1);
    for (std::size_t i = 0; i <= q; ++i) {
        fs[i] = f(xs[i]);
    }

    bool converged = false;
    for (int iter = 0; iter < max_iters; ++iter) {
        std::size_t best = 0, worst = 0;
        for (std::size_t i = 1; i <= q; ++i) {
            if (fs[i] > fs[best]) best = i;
            if (fs[i] < fs[worst]) worst = i;
        }
        double second_worst = fs[best];
        for (std::size_t i = 0; i <= q; ++i) {
            if (i != worst) second_worst = std::min(second_worst, fs[i]);
        }

        const double spread = fs[best] - fs[worst];
        if (spread <= f_tol) {  // NaN spread (all -inf) keeps iterating
            converged = true;
            break;
        }

        std::vector<double> centroid(q, 0.0);
        for (std::size_t i = 0; i <= q; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < q; ++d) centroid[d] += xs[i][d];
        }
        for (double& c : centroid) c /= static_cast<double>(q);

        auto propose = [&](double coef) {
            std::vector<double> p(q);
            for (std::size_t d = 0; d < q; ++d) {
                p[d] = centroid[d] + coef * (centroid[d] - xs[worst][d]);
            }
            clamp_to_cube(p);
            return p;
        };

        std::vector<double> xr = propose(1.0);
        const double fr = f(xr);
        if (fr > fs[best]) {
            std::vector<double> xe = propose(2.0);
            const double fe = f(xe);
            if (fe > fr) {
                xs[worst] = std::move(xe);
                fs[worst] = fe;
            } else {
                xs[worst] = std::move(xr);
                fs[worst] = fr;
            }
        } else if (fr > second_worst) {
            xs[worst] = std::move(xr);
            fs[worst] = fr;
        } else {
            bool shrink = true;
            if (fr > fs[worst]) {
                std::vector<double> xc = propose(0.5);  // outside contraction
                const double fc = f(xc);
                if (fc >= fr) {
                    xs[worst] = std::move(xc);
                    fs[worst] = fc;
                    shrink = false;
                }
            } else {
                std::vector<double> xc = propose(-0.5);  // inside contraction
                const double fc = f(xc);
                if (fc > fs[worst]) {
                    xs[worst] = std::move(xc);
                    fs[worst] = fc;
                    shrink = false;
                }
            }
            if (shrink) {
                for (std::size_t i = 0; i <= q; ++i) {
                    if (i == best) continue;
                    for (std::size_t d = 0; d < q; ++d) {
                        xs[i][d] = xs[best][d] + 0.5 * (xs[i][d] - xs[best][d]);
                    }
                    fs[i] = f(xs[i]);
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= q; ++i) {
        if (fs[i] > fs[best]) best = i;
    }
    return SimplexOutcome{xs[best], fs[best], converged};
}

std::vector<std::vector<double>> make_starts(const FitOptions& opts) {
    const std::size_t q = static_cast<std::size_t>(opts.q);
    std::vector<std::vector<double>> starts;
    starts.emplace_back(q, 0.0);
    for (std::size_t k = 0; k < q; ++k) {
        for (double s : {0.5, -0.5}) {
            std::vector<double> v(q, 0.0);
            v[k] = s;
            starts.push_back(std::move(v));
        }
    }
    NormalSampler rng(derive_seed(opts.seed, {0x5741u}));
    while (starts.size() < static_cast<std::size_t>(opts.n_starts)) {
        std::vector<double> v(q);
        for (double& c : v) {
            c = -0.9 + 1.8 * rng.next_uniform();
        }
        starts.push_back(std::move(v));
    }
    starts.resize(static_cast<std::size_t>(opts.n_starts), std::vector<double>(q, 0.0));
    return starts;
}

}  // namespace

FitResult fit_ma(const TimeSeries& z, const FitOptions& opts) {
    if (opts.q < 1) {
        throw std::invalid_argument("fit_ma: q must be >= 1");
    }
    if (opts.n_starts < 1 || !(opts.f_tol > 0.0) || !(opts.epsilon > 0.0)) {
        throw std::invalid_argument("fit_ma: invalid options");
    }
    const std::size_t q = static_cast<std::size_t>(opts.q);
    if (z.size() <= q) {
        throw TooShortSeries("fit_ma: need n >= q + 1");
    }

    const int max_iters = opts.max_iters > 0 ? opts.max_iters : 1000 * opts.q;
    Objective objective(z);

    const std::vector<std::vector<double>> starts = make_starts(opts);
    SimplexOutcome winner;
    int winner_index = -1;
    for (std::size_t s = 0; s < starts.size(); ++s) {
        SimplexOutcome out = nelder_mead_box(objective, starts[s], 0.25, opts.f_tol, max_iters);
        // Fresh small simplex at the answer; recovers from a simplex that
        // collapsed against a face before the ascent finished.
        out = nelder_mead_box(objective, out.x, 0.05, opts.f_tol, max_iters);
        if (winner_index < 0 || out.f > winner.f + 1e-12) {
            winner = std::move(out);
            winner_index = static_cast<int>(s);
        }
    }

    if (!std::isfinite(winner.f)) {
        throw AllStartsFailed("fit_ma: no start produced a finite likelihood");
    }

    FitResult result;
    result.zeta_hat = PartialParams(winner.x);
    result.theta_hat = b_transform(result.zeta_hat);
    const LikelihoodValue lik = innovations_loglikelihood(z, result.theta_hat);
    result.sigma2_hat = lik.sigma2_hat;
    result.loglik = lik.concentrated_loglik;
    result.boundary = boundary_flags(result.zeta_hat, opts.epsilon);
    result.converged = winner.converged;
    result.n_evals = objective.evals();
    result.start_index = winner_index;
    return result;
}

std::vector<std::pair<double, double>> profile_curve(const TimeSeries& z, int q, int coordinate,
                                                     const std::vector<double>& grid,
                                                     const FitOptions& opts) {
    if (q < 1) {
        throw std::invalid_argument("profile_curve: q must be >= 1");
    }
    if (coordinate < 0 || coordinate >= q) {
        throw IndexOutOfRange("profile_curve: coordinate outside 0..q-1");
    }
    for (double g : grid) {
        if (!std::isfinite(g) || std::fabs(g) > 1.0) {
            throw std::invalid_argument("profile_curve: grid values must lie in [-1, 1]");
        }
    }

    std::vector<double> base(static_cast<std::size_t>(q), 0.0);
    if (q > 1) {
        FitOptions fit_opts = opts;
        fit_opts.q = q;
        base = fit_ma(z, fit_opts).zeta_hat.zetas;
    }

    std::vector<std::pair<double, double>> curve;
    curve.reserve(grid.size());
    for (double g : grid) {
        std::vector<double> zeta = base;
        zeta[static_cast<std::size_t>(coordinate)] = g;
        double value = kNegInf;
        try {
            value = innovations_loglikelihood(z, b_transform(PartialParams(zeta)))
                        .concentrated_loglik;
        } catch (const ZeroSeries&) {
        } catch (const DegenerateVariance&) {
        }
        curve.emplace_back(g, value);
    }
    return curve;
}

}  // namespace macir
