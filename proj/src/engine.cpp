#include "nkteam/engine.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "nkteam/auction.hpp"

namespace nkteam {

std::uint64_t derive_run_seed(std::uint64_t master_seed, int run_index) {
    return derive_seed(master_seed, static_cast<std::uint64_t>(run_index));
}

std::uint64_t derive_cell_seed(std::uint64_t base_seed, int k, double p, int tau) {
    const auto p_tenths = static_cast<std::uint64_t>(std::llround(p * 10.0));
    std::uint64_t seed = derive_seed(base_seed, static_cast<std::uint64_t>(k));
    seed = derive_seed(seed, p_tenths);
    return derive_seed(seed, static_cast<std::uint64_t>(tau));
}

RunResult run_single(const ScenarioConfig& cfg, std::uint64_t run_seed, bool trace) {
    cfg.validate();
    SplitMix64 rng(run_seed);

    const auto matrix = build_interaction_matrix(cfg.n, cfg.m, cfg.k);
    const Landscape land = generate_landscape(matrix, rng);
    const UtilityWeights weights(cfg.alpha, cfg.beta);
    const int s = cfg.s();

    std::vector<Agent> population;
    population.reserve(static_cast<std::size_t>(cfg.population()));
    for (int id = 0; id < cfg.population(); ++id)
        population.push_back(init_agent(id, id / cfg.j, s, cfg.q, rng));

    // Shared status quo before the first decision.
    FullSolution prev{static_cast<std::uint32_t>(rng.next() & low_mask(cfg.n)), cfg.n};

    const auto times = auction_times(cfg.t_horizon, cfg.tau);
    std::vector<int> member_ids(static_cast<std::size_t>(cfg.m), -1);

    RunResult out;
    out.run_seed = run_seed;
    out.performance.reserve(static_cast<std::size_t>(cfg.t_horizon));

    std::size_t next_auction = 0;
    for (int t = 1; t <= cfg.t_horizon; ++t) {
        const bool auction_now =
            next_auction < times.size() && times[next_auction] == t;
        if (auction_now) {
            ++next_auction;
            AuctionOutcome outcome = run_auction(population, prev, land, weights, rng);
            for (const auto& award : outcome.slots)
                member_ids[static_cast<std::size_t>(award.slot)] = award.winner_id;
            if (trace)
                for (auto& award : outcome.slots)
                    out.auction_log.push_back(AuditRow{t, std::move(award)});
        }

        if (cfg.p > 0.0) {
            for (auto& a : population) {  // agent id ascending
                if (!a.is_member && !cfg.offteam_learning) continue;
                const ResidualContext ctx{a.slot, prev};
                learn(a, s, rng, cfg.p);
                forget(a, ctx, land, weights, rng, cfg.p);
            }
        }

        FullSolution d{0, cfg.n};
        for (int slot = 0; slot < cfg.m; ++slot) {
            const Agent& member =
                population[static_cast<std::size_t>(member_ids[static_cast<std::size_t>(slot)])];
            const ResidualContext ctx{slot, prev};
            d = compose(d, choose_solution(member, ctx, land, weights, rng));
        }

        const double phi = team_performance(land, d);
        out.performance.push_back(phi);
        if (trace)
            out.trace.push_back(TraceRow{t, phi, d.bits, member_ids, auction_now});
        prev = d;
    }

    out.optimum = global_optimum(land).value;
    return out;
}

namespace {

int resolve_threads(int requested, int runs) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("NKTEAM_THREADS")) t = std::atoi(env);
    }
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    return std::min(t, std::max(1, runs));
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& cfg, int n_threads) {
    cfg.validate();
    const int threads = resolve_threads(n_threads, cfg.runs);
    std::vector<RunResult> results(static_cast<std::size_t>(cfg.runs));

    if (threads == 1) {
        for (int i = 0; i < cfg.runs; ++i)
            results[static_cast<std::size_t>(i)] =
                run_single(cfg, derive_run_seed(cfg.master_seed, i));
    } else {
        std::atomic<int> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&]() {
            try {
                for (int i = next.fetch_add(1); i < cfg.runs; i = next.fetch_add(1))
                    results[static_cast<std::size_t>(i)] =
                        run_single(cfg, derive_run_seed(cfg.master_seed, i));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads - 1));
        for (int i = 0; i < threads - 1; ++i) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }

    return summarize(cfg, results);
}

const GridCell* GridResult::find(int k, double p, int tau) const {
    const auto p10 = std::llround(p * 10.0);
    for (const auto& cell : cells)
        if (cell.k == k && cell.tau == tau && std::llround(cell.p * 10.0) == p10)
            return &cell;
    return nullptr;
}

GridResult run_grid(const ScenarioConfig& base, const std::vector<int>& ks,
                    const std::vector<double>& ps, const std::vector<int>& taus,
                    int n_threads) {
    if (ks.empty() || ps.empty() || taus.empty())
        throw ConfigError("grid value lists must be non-empty");

    GridResult grid;
    grid.base = base;
    grid.ks = ks;
    grid.ps = ps;
    grid.taus = taus;

    // Validate every combination before running anything.
    std::vector<ScenarioConfig> cell_cfgs;
    cell_cfgs.reserve(ks.size() * ps.size() * taus.size());
    for (int k : ks)
        for (double p : ps)
            for (int tau : taus) {
                ScenarioConfig cfg = base;
                cfg.k = k;
                cfg.p = p;
                cfg.tau = tau;
                cfg.master_seed = derive_cell_seed(base.master_seed, k, p, tau);
                try {
                    cfg.validate();
                } catch (const ConfigError& e) {
                    throw ConfigError("grid cell (k=" + std::to_string(k) +
                                      ", p=" + std::to_string(p) +
                                      ", tau=" + std::to_string(tau) +
                                      "): " + e.what());
                }
                cell_cfgs.push_back(cfg);
            }

    grid.cells.reserve(cell_cfgs.size());
    for (const auto& cfg : cell_cfgs) {
        GridCell cell{cfg.k, cfg.p, cfg.tau, cfg.master_seed, {}};
        cell.result = run_scenario(cfg, n_threads);
        grid.cells.push_back(std::move(cell));
    }
    return grid;
}

}  // namespace nkteam
