#include "nkteam/scenario_config.hpp"

#include <cmath>

namespace nkteam {

void ScenarioConfig::validate() const {
    if (n < 1 || n > 24)
        throw ConfigError("n must lie in [1, 24] (exhaustive-search cap)");
    if (m < 2) throw ConfigError("m must be at least 2");
    if (n % m != 0) throw ConfigError("n must be divisible by m");
    if (k < 0 || k > n - 1) throw ConfigError("k must lie in [0, n-1]");
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p must lie in [0, 1]");
    if (t_horizon < 1) throw ConfigError("t_horizon must be positive");
    if (tau < 1) throw ConfigError("tau must be at least 1");
    if (t_horizon % tau != 0)
        throw ConfigError("t_horizon must be divisible by tau");
    if (std::abs(alpha + beta - 1.0) > 1e-9)
        throw ConfigError("alpha+beta must equal 1");
    if (runs < 1) throw ConfigError("runs must be at least 1");
    if (j < 2)
        throw ConfigError("j must be at least 2 (second price undefined otherwise)");
    const long long pool = 1ll << s();
    if (q < 1 || q >= pool) throw ConfigError("q must lie in [1, 2^(n/m))");
}

}  // namespace nkteam
