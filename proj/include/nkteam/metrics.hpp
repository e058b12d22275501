// Normalization against per-run optima, cross-run averaging and the total
// Manhattan distance.

#pragma once

#include <span>
#include <vector>

#include "nkteam/run_result.hpp"
#include "nkteam/scenario_config.hpp"

namespace nkteam {

struct ScenarioResult {
    ScenarioConfig config;
    std::vector<double> mean_normalized;  // per-timestep cross-run average
    std::vector<double> per_run_md;       // Manhattan distance of each run
    double md = 0.0;                      // Manhattan distance of the average series
    int n_runs = 0;
};

// Per timestep t: (1/R) * sum_r performance_r[t] / optimum_r, accumulated in
// run-index order. Throws on mismatched lengths or a non-positive optimum
// (degenerate landscape).
std::vector<double> normalize_and_average(std::span<const RunResult> results);

// sum over t of (1 - series[t]), ascending t.
double manhattan_distance(std::span<const double> series);

// Sample standard error of the mean of the per-run Manhattan distances.
double standard_error(std::span<const double> per_run_md);

// Bundles the full aggregation of one scenario's runs.
ScenarioResult summarize(const ScenarioConfig& cfg,
                         std::span<const RunResult> results);

}  // namespace nkteam
