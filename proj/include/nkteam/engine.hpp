// Orchestration of a single run's event sequence and of Monte Carlo
// scenario/grid sweeps with reproducible seeding.
//
// Event sequence per run (fixed, all orders documented):
//   setup: build structure, generate landscape (decision-major draws),
//          init agents id 0..P-1 (slot = id / J), draw status quo d_0
//          (one word, low N bits)
//   for t = 1..T:
//     (a) if t is an auction step, run the auction against d_{t-1}
//     (b) agents learn then forget, agent id ascending: team members
//         always, non-members only while offteam_learning is set
//         (the default; phase skipped entirely when p = 0)
//     (c) each slot's member chooses a sub-solution against d_{t-1},
//         slot ascending
//     (d) d_t = concatenation of the choices; record team performance
//   finally: exhaustive global optimum.
//
// Determinism: (config, seed) fully determines every output, independent of
// thread count. Run seeds derive from the scenario master seed by run index;
// grid cell seeds derive from the base seed by (k, 10p, tau).

#pragma once

#include <cstdint>
#include <vector>

#include "nkteam/metrics.hpp"
#include "nkteam/run_result.hpp"
#include "nkteam/scenario_config.hpp"

namespace nkteam {

std::uint64_t derive_run_seed(std::uint64_t master_seed, int run_index);
std::uint64_t derive_cell_seed(std::uint64_t base_seed, int k, double p, int tau);

// Executes one run. `trace` additionally records per-timestep rows and the
// auction audit log.
RunResult run_single(const ScenarioConfig& cfg, std::uint64_t run_seed,
                     bool trace = false);

// R independent runs aggregated in run-index order. n_threads = 0 resolves
// to the NKTEAM_THREADS environment variable, else hardware concurrency.
ScenarioResult run_scenario(const ScenarioConfig& cfg, int n_threads = 0);

struct GridCell {
    int k = 0;
    double p = 0.0;
    int tau = 0;
    std::uint64_t seed = 0;
    ScenarioResult result;
};

struct GridResult {
    ScenarioConfig base;
    std::vector<int> ks;
    std::vector<double> ps;
    std::vector<int> taus;
    std::vector<GridCell> cells;  // k-major, then p, then tau

    const GridCell* find(int k, double p, int tau) const;
};

// One scenario per (k, p, tau) combination; every combination is validated
// before any cell runs. Cells are seeded independently so any one of them
// can be reproduced in isolation.
GridResult run_grid(const ScenarioConfig& base, const std::vector<int>& ks,
                    const std::vector<double>& ps, const std::vector<int>& taus,
                    int n_threads = 0);

}  // namespace nkteam
