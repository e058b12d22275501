// Scenario configuration shared by the engine and the CLI front end.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nkteam {

// Raised on malformed or inconsistent configuration; the message names the
// offending key so the CLI can surface it directly.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ScenarioConfig {
    int k = 3;                        // interdependencies per decision
    double p = 0.1;                   // learning/forgetting probability
    int tau = 1;                      // auctions per run
    int t_horizon = 200;              // timesteps per run
    int n = 12;                       // decisions
    int m = 3;                        // slots (team size)
    double alpha = 0.5;               // weight of own-slot performance
    double beta = 0.5;                // weight of residual performance
    int runs = 1500;                  // Monte Carlo replications
    int j = 5;                        // candidates per slot
    int q = 4;                        // initial memory size
    std::uint64_t master_seed = 42;
    bool offteam_learning = true;     // non-members learn/forget between auctions

    int s() const { return n / m; }
    int population() const { return j * m; }

    // Throws ConfigError naming the offending key on any violated invariant.
    void validate() const;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

}  // namespace nkteam
