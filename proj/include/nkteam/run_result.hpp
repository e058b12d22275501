// Per-run outputs of the simulation engine.

#pragma once

#include <cstdint>
#include <vector>

#include "nkteam/auction.hpp"

namespace nkteam {

struct TraceRow {
    int t = 0;
    double phi = 0.0;               // team performance of the implemented solution
    std::uint32_t solution = 0;     // implemented full solution, canonical encoding
    std::vector<int> members;       // agent id per slot
    bool auction_held = false;
};

struct RunResult {
    std::vector<double> performance;     // raw team performance, t = 1..T
    double optimum = 0.0;                // exhaustive max over the landscape
    std::uint64_t run_seed = 0;
    std::vector<TraceRow> trace;         // filled only when tracing
    std::vector<AuditRow> auction_log;   // filled only when tracing
};

}  // namespace nkteam
