#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "macir/estimator.hpp"
#include "macir/types.hpp"

namespace macir {

struct SimSpec {
    MaCoefficients theta;
    double sigma = 1.0;   ///< innovation standard deviation
    std::size_t n = 0;    ///< series length
    std::uint64_t seed = 0;
};

/// Draws n + q seeded Gaussian innovations and applies the MA filter
/// z_t = a_t - sum_i theta_i a_{t-i}. Exact: an MA(q) has finite memory,
/// so no burn-in is involved. Identical specs give bit-identical series.
TimeSeries simulate_ma(const SimSpec& spec);

enum class ExecutionMode {
    Serial,    ///< reference single-thread loop
    Parallel,  ///< OpenMP over (cell, replication) work units
};

/// Grid definition for the boundary-probability experiment: MA(1) series
/// are simulated over (n, theta1) cells and each replication is fit with
/// MA(q) for every q in q_values, reusing the same series across orders.
struct ExperimentConfig {
    std::vector<std::size_t> n_values{25, 50};
    std::vector<double> theta1_values{-0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 0.9};
    std::vector<int> q_values{1, 2, 3, 4};
    int replications = 100;
    double epsilon = kDefaultBoundaryEpsilon;
    std::uint64_t master_seed = 123456789;
    FitOptions fit;             ///< n_starts / f_tol / max_iters overrides; q and seed are set per fit
    ExecutionMode mode = ExecutionMode::Parallel;
    int threads = 0;            ///< 0 = runtime default
};

struct CellResult {
    std::size_t n = 0;
    double theta1 = 0.0;
    int q = 0;
    double prop_boundary = 0.0;  ///< boundary_count / (replications - failures)
    int boundary_count = 0;
    int replications = 0;
    int failures = 0;
    double mean_fit_seconds = 0.0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<CellResult> cells;  ///< ordered by (n, theta1, q) as configured
    std::string version;
};

/// Per-replication seed contract: a stable hash of the master seed, the
/// series length, the theta1 grid index and the replication number, so any
/// single cell can be reproduced in isolation.
std::uint64_t replication_seed(std::uint64_t master_seed, std::size_t n,
                               std::size_t theta1_index, int replication);

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Runs the full grid. Work units are independent (cell, replication)
/// pairs; in Parallel mode they are distributed over OpenMP threads and the
/// per-unit results land in preassigned slots, so the report is identical
/// under any schedule or thread count. Fit failures are recorded per cell
/// and excluded from the proportion's denominator, never silently dropped.
ExperimentReport run_experiment(const ExperimentConfig& config, const ProgressFn& progress = {});

/// Table-shaped CSV: header n,theta1,q,prop_boundary,count,reps,failures and
/// one row per cell. Byte-identical for identical reports.
std::string experiment_csv(const ExperimentReport& report);

/// Full report with provenance (config echo, version, master seed) and
/// per-cell mean fit times.
nlohmann::json experiment_json(const ExperimentReport& report);

}  // namespace macir
