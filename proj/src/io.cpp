#include "nkteam/io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "nkteam/format.hpp"
#include "nkteam/metrics.hpp"

namespace nkteam {

namespace {

using nlohmann::json;

json config_to_json(const ScenarioConfig& cfg) {
    json j;
    j["k"] = cfg.k;
    j["p"] = cfg.p;
    j["tau"] = cfg.tau;
    j["t_horizon"] = cfg.t_horizon;
    j["n"] = cfg.n;
    j["m"] = cfg.m;
    j["alpha"] = cfg.alpha;
    j["beta"] = cfg.beta;
    j["runs"] = cfg.runs;
    j["j"] = cfg.j;
    j["q"] = cfg.q;
    j["master_seed"] = cfg.master_seed;
    j["offteam_learning"] = cfg.offteam_learning;
    return j;
}

std::string tau_label(int tau) {
    switch (tau) {
        case 1: return "initial";
        case 20: return "moderate";
        case 200: return "high";
        default: return std::to_string(tau);
    }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

void write_trace_csv(std::ostream& out, const RunResult& run) {
    out << "t,phi,members,auction\n";
    for (const auto& row : run.trace) {
        out << row.t << ',' << format_double(row.phi) << ',';
        for (std::size_t i = 0; i < row.members.size(); ++i) {
            if (i) out << ';';
            out << row.members[i];
        }
        out << ',' << (row.auction_held ? 1 : 0) << '\n';
    }
}

void emit_contour_grid(const GridResult& grid,
                       const std::filesystem::path& out_dir) {
    // Refuse an incomplete grid up front.
    std::string missing;
    for (int k : grid.ks)
        for (double p : grid.ps)
            for (int tau : grid.taus)
                if (grid.find(k, p, tau) == nullptr)
                    missing += " (k=" + std::to_string(k) + ", p=" + format_double(p) +
                               ", tau=" + std::to_string(tau) + ")";
    if (!missing.empty())
        throw std::runtime_error("emit_contour_grid: missing cells:" + missing);

    std::filesystem::create_directories(out_dir);
    for (int k : grid.ks) {
        const auto k_dir = out_dir / std::to_string(k);
        std::filesystem::create_directories(k_dir);
        std::string csv = "tau";
        for (double p : grid.ps) csv += "," + format_double(p);
        csv += '\n';
        for (int tau : grid.taus) {
            csv += tau_label(tau);
            for (double p : grid.ps)
                csv += "," + format_double(grid.find(k, p, tau)->result.md);
            csv += '\n';
        }
        write_file(k_dir / "md_grid.csv", csv);
    }

    json j;
    j["mode"] = "grid";
    j["config"] = config_to_json(grid.base);
    j["ks"] = grid.ks;
    j["ps"] = grid.ps;
    j["taus"] = grid.taus;
    json cells = json::array();
    for (const auto& cell : grid.cells) {
        json c;
        c["k"] = cell.k;
        c["p"] = cell.p;
        c["tau"] = cell.tau;
        c["seed"] = cell.seed;
        c["md"] = cell.result.md;
        c["se"] = standard_error(cell.result.per_run_md);
        c["n_runs"] = cell.result.n_runs;
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    write_file(out_dir / "summary.json", j.dump(2) + "\n");
}

void write_single_summary(const std::filesystem::path& path,
                          const ScenarioConfig& cfg, const RunResult& run) {
    json j;
    j["mode"] = "single";
    j["config"] = config_to_json(cfg);
    j["run_seed"] = run.run_seed;
    j["optimum"] = run.optimum;
    j["performance"] = run.performance;
    std::vector<double> normalized;
    normalized.reserve(run.performance.size());
    for (double phi : run.performance) normalized.push_back(phi / run.optimum);
    j["normalized"] = std::move(normalized);
    write_file(path, j.dump(2) + "\n");
}

void write_scenario_summary(const std::filesystem::path& path,
                            const ScenarioResult& result) {
    json j;
    j["mode"] = "scenario";
    j["config"] = config_to_json(result.config);
    j["md"] = result.md;
    j["se"] = standard_error(result.per_run_md);
    j["n_runs"] = result.n_runs;
    j["mean_normalized"] = result.mean_normalized;
    j["per_run_md"] = result.per_run_md;
    write_file(path, j.dump(2) + "\n");
}

std::vector<SummaryCell> read_grid_summary(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read summary: " + path.string());
    json j = json::parse(in);
    std::vector<SummaryCell> out;
    for (const auto& c : j.at("cells")) {
        SummaryCell cell;
        cell.k = c.at("k").get<int>();
        cell.p = c.at("p").get<double>();
        cell.tau = c.at("tau").get<int>();
        cell.seed = c.at("seed").get<std::uint64_t>();
        cell.md = c.at("md").get<double>();
        out.push_back(cell);
    }
    return out;
}

}  // namespace nkteam
