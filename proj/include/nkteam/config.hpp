// Flat key-value configuration files.
//
// Schema (all keys optional, defaults in parentheses):
//   k (3)  p (0.1)  tau (1)  t_horizon (200)  n (12)  m (3)
//   alpha (0.5)  beta (0.5)  runs (1500)  j (5)  q (4)
//   master_seed (42)  offteam_learning (on)
//   grid_ks (3,5,11)  grid_ps (0,0.1,0.2,0.3,0.4,0.5)  grid_taus (1,20,200)
//
// Lines are `key = value`; '#' starts a comment. Unknown or duplicate keys
// are rejected with a message naming the key.

#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "nkteam/scenario_config.hpp"

namespace nkteam {

struct FileConfig {
    ScenarioConfig scenario;
    std::vector<int> grid_ks = {3, 5, 11};
    std::vector<double> grid_ps = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
    std::vector<int> grid_taus = {1, 20, 200};
};

// Parses and validates configuration text. Throws ConfigError.
FileConfig parse_config_text(std::string_view text);

// Reads `path` and parses it. Throws ConfigError on parse/validation
// problems and std::runtime_error when the file cannot be read.
FileConfig parse_config(const std::filesystem::path& path);

}  // namespace nkteam
