// Command-line front end.
//
//   nkteam --mode single   [--config FILE] [--seed S] [--out DIR] [--trace]
//   nkteam --mode scenario [--config FILE] [--seed S] [--runs R] [--out DIR] [--trace]
//   nkteam --mode grid     [--config FILE] [--seed S] [--runs R] [--out DIR]
//
// Exit codes: 0 success, 1 configuration error, 2 I/O failure.
// Thread count is taken from the NKTEAM_THREADS environment variable.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nkteam/config.hpp"
#include "nkteam/engine.hpp"
#include "nkteam/io.hpp"

namespace fs = std::filesystem;
using namespace nkteam;

namespace {

void write_run_traces(const fs::path& out_dir, const RunResult& run, int index) {
    const fs::path trace_dir = out_dir / "traces";
    fs::create_directories(trace_dir);
    {
        std::ofstream out(trace_dir / ("run_" + std::to_string(index) + ".csv"),
                          std::ios::binary);
        if (!out) throw std::runtime_error("cannot write trace file");
        write_trace_csv(out, run);
    }
    {
        std::ofstream out(
            trace_dir / ("run_" + std::to_string(index) + "_auctions.csv"),
            std::ios::binary);
        if (!out) throw std::runtime_error("cannot write auction audit file");
        write_audit_csv(out, run.auction_log);
    }
}

int run_mode(const std::string& mode, const FileConfig& fc, const fs::path& out_dir,
             bool trace) {
    const ScenarioConfig& cfg = fc.scenario;
    fs::create_directories(out_dir);

    if (mode == "single") {
        const RunResult run = run_single(cfg, derive_run_seed(cfg.master_seed, 0), trace);
        write_single_summary(out_dir / "summary.json", cfg, run);
        if (trace) write_run_traces(out_dir, run, 0);
        return 0;
    }

    if (mode == "scenario") {
        if (trace) {
            // Tracing keeps per-run files; runs execute sequentially.
            std::vector<RunResult> results;
            results.reserve(static_cast<std::size_t>(cfg.runs));
            for (int i = 0; i < cfg.runs; ++i) {
                results.push_back(run_single(cfg, derive_run_seed(cfg.master_seed, i), true));
                write_run_traces(out_dir, results.back(), i);
            }
            write_scenario_summary(out_dir / "summary.json", summarize(cfg, results));
        } else {
            write_scenario_summary(out_dir / "summary.json", run_scenario(cfg));
        }
        return 0;
    }

    // grid
    if (trace)
        std::cerr << "note: --trace applies to single and scenario modes only\n";
    const GridResult grid = run_grid(cfg, fc.grid_ks, fc.grid_ps, fc.grid_taus);
    emit_contour_grid(grid, out_dir);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo simulator of self-organizing teams on NK fitness landscapes"};

    std::string config_path;
    std::string mode = "scenario";
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    int runs = 0;
    bool trace = false;

    app.add_option("--config", config_path, "configuration file (key = value)");
    app.add_option("--mode", mode, "single | scenario | grid")
        ->check(CLI::IsMember({"single", "scenario", "grid"}));
    auto* seed_opt = app.add_option("--seed", seed, "override master_seed");
    auto* runs_opt = app.add_option("--runs", runs, "override runs per scenario");
    app.add_option("--out", out_dir, "output directory (default: out)");
    app.add_flag("--trace", trace, "write per-run trace and auction audit CSVs");

    CLI11_PARSE(app, argc, argv);

    FileConfig fc;
    try {
        if (!config_path.empty()) fc = parse_config(config_path);
        if (seed_opt->count() > 0) fc.scenario.master_seed = seed;
        if (runs_opt->count() > 0) fc.scenario.runs = runs;
        fc.scenario.validate();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        return run_mode(mode, fc, out_dir, trace);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
