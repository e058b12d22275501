#include "nkteam/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace nkteam {

namespace {

std::string_view trim(std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r'))
        v.remove_suffix(1);
    return v;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
    T out{};
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("invalid value for key '" + std::string(key) + "': '" +
                          std::string(value) + "'");
    return out;
}

template <typename T>
std::vector<T> parse_list(std::string_view key, std::string_view value) {
    std::vector<T> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        std::size_t comma = value.find(',', start);
        if (comma == std::string_view::npos) comma = value.size();
        const auto item = trim(value.substr(start, comma - start));
        if (item.empty())
            throw ConfigError("empty list item for key '" + std::string(key) + "'");
        out.push_back(parse_number<T>(key, item));
        start = comma + 1;
        if (comma == value.size()) break;
    }
    if (out.empty())
        throw ConfigError("empty list for key '" + std::string(key) + "'");
    return out;
}

bool parse_switch(std::string_view key, std::string_view value) {
    if (value == "on") return true;
    if (value == "off") return false;
    throw ConfigError("invalid value for key '" + std::string(key) +
                      "': expected 'on' or 'off'");
}

}  // namespace

FileConfig parse_config_text(std::string_view text) {
    FileConfig fc;
    std::set<std::string, std::less<>> seen;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        const bool last = eol == text.size();
        pos = eol + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            if (last) break;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("malformed line (expected 'key = value'): '" +
                              std::string(line) + "'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("malformed line (empty key): '" + std::string(line) + "'");
        if (!seen.insert(std::string(key)).second)
            throw ConfigError("duplicate key '" + std::string(key) + "'");

        auto& sc = fc.scenario;
        if (key == "k") sc.k = parse_number<int>(key, value);
        else if (key == "p") sc.p = parse_number<double>(key, value);
        else if (key == "tau") sc.tau = parse_number<int>(key, value);
        else if (key == "t_horizon") sc.t_horizon = parse_number<int>(key, value);
        else if (key == "n") sc.n = parse_number<int>(key, value);
        else if (key == "m") sc.m = parse_number<int>(key, value);
        else if (key == "alpha") sc.alpha = parse_number<double>(key, value);
        else if (key == "beta") sc.beta = parse_number<double>(key, value);
        else if (key == "runs") sc.runs = parse_number<int>(key, value);
        else if (key == "j") sc.j = parse_number<int>(key, value);
        else if (key == "q") sc.q = parse_number<int>(key, value);
        else if (key == "master_seed") sc.master_seed = parse_number<std::uint64_t>(key, value);
        else if (key == "offteam_learning") sc.offteam_learning = parse_switch(key, value);
        else if (key == "grid_ks") fc.grid_ks = parse_list<int>(key, value);
        else if (key == "grid_ps") fc.grid_ps = parse_list<double>(key, value);
        else if (key == "grid_taus") fc.grid_taus = parse_list<int>(key, value);
        else throw ConfigError("unknown key '" + std::string(key) + "'");

        if (last) break;
    }

    fc.scenario.validate();
    for (int k : fc.grid_ks)
        if (k < 0 || k > fc.scenario.n - 1)
            throw ConfigError("grid_ks: k=" + std::to_string(k) + " must lie in [0, n-1]");
    for (double p : fc.grid_ps)
        if (!(p >= 0.0 && p <= 1.0))
            throw ConfigError("grid_ps: values must lie in [0, 1]");
    for (int tau : fc.grid_taus)
        if (tau < 1 || fc.scenario.t_horizon % tau != 0)
            throw ConfigError("grid_taus: tau=" + std::to_string(tau) +
                              " must divide t_horizon");
    return fc;
}

FileConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read config file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

}  // namespace nkteam
