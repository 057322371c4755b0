#include "macir/montecarlo.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "macir/errors.hpp"
#include "macir/rng.hpp"
#include "macir/version.hpp"

namespace macir {

namespace {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.n_values.empty() || cfg.theta1_values.empty() || cfg.q_values.empty()) {
        throw std::invalid_argument("experiment: empty grid");
    }
    if (cfg.replications < 1) {
        throw std::invalid_argument("experiment: replications must be >= 1");
    }
    if (!(cfg.epsilon > 0.0)) {
        throw std::invalid_argument("experiment: epsilon must be > 0");
    }
    for (double th : cfg.theta1_values) {
        if (!(std::fabs(th) < 1.0)) {
            throw std::invalid_argument("experiment: true theta1 values must satisfy |theta1| < 1");
        }
    }
    for (std::size_t n : cfg.n_values) {
        for (int q : cfg.q_values) {
            if (q < 1 || n <= static_cast<std::size_t>(q)) {
                throw std::invalid_argument("experiment: need n > q for every (n, q) pair");
            }
        }
    }
}

struct UnitOutcome {
    std::vector<std::uint8_t> boundary;  // per q
    std::vector<std::uint8_t> failed;
    std::vector<double> seconds;
};

}  // namespace

TimeSeries simulate_ma(const SimSpec& spec) {
    const std::size_t q = spec.theta.order();
    if (q == 0) {
        throw std::invalid_argument("simulate_ma: order must be >= 1");
    }
    if (spec.n < 1 || !(spec.sigma > 0.0)) {
        throw std::invalid_argument("simulate_ma: need n >= 1 and sigma > 0");
    }
    for (double t : spec.theta.coeffs) {
        if (!std::isfinite(t)) {
            throw NonFiniteInput("simulate_ma: theta contains a non-finite value");
        }
    }

    NormalSampler rng(spec.seed);
    std::vector<double> a(spec.n + q);
    for (double& x : a) {
        x = spec.sigma * rng.next();
    }

    std::vector<double> z(spec.n);
    for (std::size_t t = 0; t < spec.n; ++t) {
        double value = a[t + q];
        for (std::size_t i = 1; i <= q; ++i) {
            value -= spec.theta.coeffs[i - 1] * a[t + q - i];
        }
        z[t] = value;
    }
    return TimeSeries(std::move(z));
}

std::uint64_t replication_seed(std::uint64_t master_seed, std::size_t n,
                               std::size_t theta1_index, int replication) {
    return derive_seed(master_seed, {static_cast<std::uint64_t>(n),
                                     static_cast<std::uint64_t>(theta1_index),
                                     static_cast<std::uint64_t>(replication)});
}

ExperimentReport run_experiment(const ExperimentConfig& config, const ProgressFn& progress) {
    validate(config);

    const std::size_t n_cells = config.n_values.size() * config.theta1_values.size();
    const std::size_t reps = static_cast<std::size_t>(config.replications);
    const std::size_t n_units = n_cells * reps;
    const std::size_t n_orders = config.q_values.size();

    std::vector<UnitOutcome> outcomes(n_units);

    auto run_unit = [&](std::size_t u) {
        const std::size_t cell = u / reps;
        const int rep = static_cast<int>(u % reps);
        const std::size_t n_idx = cell / config.theta1_values.size();
        const std::size_t th_idx = cell % config.theta1_values.size();
        const std::size_t n = config.n_values[n_idx];
        const double theta1 = config.theta1_values[th_idx];

        SimSpec spec;
        spec.theta = MaCoefficients({theta1});
        spec.sigma = 1.0;
        spec.n = n;
        spec.seed = replication_seed(config.master_seed, n, th_idx, rep);
        const TimeSeries series = simulate_ma(spec);

        UnitOutcome& out = outcomes[u];
        out.boundary.assign(n_orders, 0);
        out.failed.assign(n_orders, 0);
        out.seconds.assign(n_orders, 0.0);
        for (std::size_t qi = 0; qi < n_orders; ++qi) {
            FitOptions opts = config.fit;
            opts.q = config.q_values[qi];
            opts.epsilon = config.epsilon;
            opts.seed = derive_seed(spec.seed, {0xF17u, static_cast<std::uint64_t>(opts.q)});
            const auto t0 = std::chrono::steady_clock::now();
            try {
                const FitResult fit = fit_ma(series, opts);
                out.boundary[qi] = fit.boundary.on_boundary ? 1 : 0;
            } catch (const AllStartsFailed&) {
                out.failed[qi] = 1;
            }
            const auto t1 = std::chrono::steady_clock::now();
            out.seconds[qi] = std::chrono::duration<double>(t1 - t0).count();
        }
    };

    std::size_t done = 0;
    auto report_progress = [&]() {
        ++done;
        if (progress) {
            progress(done, n_units);
        }
    };

#ifdef _OPENMP
    if (config.mode == ExecutionMode::Parallel) {
        const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (std::ptrdiff_t u = 0; u < static_cast<std::ptrdiff_t>(n_units); ++u) {
            run_unit(static_cast<std::size_t>(u));
#pragma omp critical(macir_progress)
            report_progress();
        }
    } else
#endif
    {
        for (std::size_t u = 0; u < n_units; ++u) {
            run_unit(u);
            report_progress();
        }
    }

    // Ordered reduction over the preassigned slots: the report is a pure
    // function of the config, independent of the execution schedule.
    ExperimentReport report;
    report.config = config;
    report.version = kVersion;
    report.cells.reserve(n_cells * n_orders);
    for (std::size_t cell = 0; cell < n_cells; ++cell) {
        const std::size_t n_idx = cell / config.theta1_values.size();
        const std::size_t th_idx = cell % config.theta1_values.size();
        for (std::size_t qi = 0; qi < n_orders; ++qi) {
            CellResult cr;
            cr.n = config.n_values[n_idx];
            cr.theta1 = config.theta1_values[th_idx];
            cr.q = config.q_values[qi];
            cr.replications = config.replications;
            double total_seconds = 0.0;
            for (std::size_t r = 0; r < reps; ++r) {
                const UnitOutcome& out = outcomes[cell * reps + r];
                cr.boundary_count += out.boundary[qi];
                cr.failures += out.failed[qi];
                total_seconds += out.seconds[qi];
            }
            const int denom = cr.replications - cr.failures;
            cr.prop_boundary = denom > 0 ? static_cast<double>(cr.boundary_count) / denom : 0.0;
            cr.mean_fit_seconds = total_seconds / static_cast<double>(reps);
            report.cells.push_back(cr);
        }
    }
    return report;
}

std::string experiment_csv(const ExperimentReport& report) {
    std::string csv = "n,theta1,q,prop_boundary,count,reps,failures\n";
    for (const CellResult& c : report.cells) {
        csv += std::to_string(c.n);
        csv += ',';
        csv += format_double(c.theta1);
        csv += ',';
        csv += std::to_string(c.q);
        csv += ',';
        csv += format_double(c.prop_boundary);
        csv += ',';
        csv += std::to_string(c.boundary_count);
        csv += ',';
        csv += std::to_string(c.replications);
        csv += ',';
        csv += std::to_string(c.failures);
        csv += '\n';
    }
    return csv;
}

nlohmann::json experiment_json(const ExperimentReport& report) {
    nlohmann::json cells = nlohmann::json::array();
    for (const CellResult& c : report.cells) {
        cells.push_back({{"n", c.n},
                         {"theta1", c.theta1},
                         {"q", c.q},
                         {"prop_boundary", c.prop_boundary},
                         {"count", c.boundary_count},
                         {"reps", c.replications},
                         {"failures", c.failures},
                         {"mean_fit_seconds", c.mean_fit_seconds}});
    }
    const ExperimentConfig& cfg = report.config;
    nlohmann::json config = {
        {"n_values", cfg.n_values},
        {"theta1_values", cfg.theta1_values},
        {"q_values", cfg.q_values},
        {"replications", cfg.replications},
        {"epsilon", cfg.epsilon},
        {"master_seed", cfg.master_seed},
        {"fit", {{"n_starts", cfg.fit.n_starts},
                 {"f_tol", cfg.fit.f_tol},
                 {"max_iters", cfg.fit.max_iters}}},
        {"mode", cfg.mode == ExecutionMode::Parallel ? "parallel" : "serial"},
        {"threads", cfg.threads},
    };
    return nlohmann::json{{"version", report.version},
                          {"master_seed", cfg.master_seed},
                          {"config", config},
                          {"cells", cells}};
}

}  // namespace macir
