// Machine-readable outputs: contour-grid CSVs, JSON summaries and per-run
// trace files. All numeric formatting is shortest round-trip decimal so
// repeated invocations diff cleanly.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "nkteam/engine.hpp"
#include "nkteam/run_result.hpp"

namespace nkteam {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// Per-timestep trace: t, phi, members (semicolon-joined), auction flag.
void write_trace_csv(std::ostream& out, const RunResult& run);

// One md_grid.csv per k under <out_dir>/<k>/ (header row of p values, one
// row per tau labeled initial/moderate/high for 1/20/200), plus
// <out_dir>/summary.json with config, seeds and per-cell MD.
// Refuses an incomplete grid, reporting the missing cells.
void emit_contour_grid(const GridResult& grid,
                       const std::filesystem::path& out_dir);

void write_single_summary(const std::filesystem::path& path,
                          const ScenarioConfig& cfg, const RunResult& run);

void write_scenario_summary(const std::filesystem::path& path,
                            const ScenarioResult& result);

// Reads back the MD value of every cell recorded in a grid summary.json,
// keyed exactly as written. Used to cross-check the CSVs.
struct SummaryCell {
    int k = 0;
    double p = 0.0;
    int tau = 0;
    std::uint64_t seed = 0;
    double md = 0.0;
};
std::vector<SummaryCell> read_grid_summary(const std::filesystem::path& path);

}  // namespace nkteam
