#include "nkteam/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace nkteam {

std::vector<double> normalize_and_average(std::span<const RunResult> results) {
    if (results.empty())
        throw std::invalid_argument("normalize_and_average: no runs");
    const std::size_t t_len = results.front().performance.size();
    for (const auto& r : results) {
        if (r.performance.size() != t_len)
            throw std::invalid_argument("normalize_and_average: series length mismatch");
        if (!(r.optimum > 0.0))
            throw std::invalid_argument(
                "normalize_and_average: degenerate landscape (optimum <= 0)");
    }
    const double r_count = static_cast<double>(results.size());
    std::vector<double> out(t_len, 0.0);
    for (std::size_t t = 0; t < t_len; ++t) {
        double acc = 0.0;
        for (const auto& r : results) acc += r.performance[t] / r.optimum;
        out[t] = acc / r_count;
    }
    return out;
}

double manhattan_distance(std::span<const double> series) {
    double md = 0.0;
    for (double v : series) md += 1.0 - v;
    return md;
}

double standard_error(std::span<const double> per_run_md) {
    const std::size_t n = per_run_md.size();
    if (n < 2) return 0.0;
    double mean = 0.0;
    for (double v : per_run_md) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : per_run_md) ss += (v - mean) * (v - mean);
    const double variance = ss / static_cast<double>(n - 1);
    return std::sqrt(variance / static_cast<double>(n));
}

ScenarioResult summarize(const ScenarioConfig& cfg,
                         std::span<const RunResult> results) {
    ScenarioResult out;
    out.config = cfg;
    out.mean_normalized = normalize_and_average(results);
    out.md = manhattan_distance(out.mean_normalized);
    out.n_runs = static_cast<int>(results.size());
    out.per_run_md.reserve(results.size());
    for (const auto& r : results) {
        double md = 0.0;
        for (double phi : r.performance) md += 1.0 - phi / r.optimum;
        out.per_run_md.push_back(md);
    }
    return out;
}

}  // namespace nkteam
