// Bounded-memory agents: endowment, expected utility under a frozen
// residual context, solution choice, learning and forgetting.

#pragma once

#include <cstdint>
#include <vector>

#include "nkteam/landscape.hpp"
#include "nkteam/rng.hpp"
#include "nkteam/solution.hpp"

namespace nkteam {

// Validated pair of utility weights; construction rejects alpha+beta != 1.
struct UtilityWeights {
    double alpha;
    double beta;

    UtilityWeights(double a, double b);
};

struct Agent {
    int id = 0;
    int slot = 0;
    std::vector<std::uint32_t> memory;  // known sub-solutions, sorted ascending
    bool is_member = false;
};

// Endows the agent with q distinct sub-solutions sampled uniformly without
// replacement from the 2^s possibilities. Throws on q outside [1, 2^s).
Agent init_agent(int id, int slot, int s, int q, SplitMix64& rng);

// The residual decisions an agent holds fixed while evaluating its own
// options: everything outside `slot`, taken from the previously implemented
// full solution. The slot's own bits in `previous` are ignored (overlaid).
struct ResidualContext {
    int slot = 0;
    FullSolution previous;

    FullSolution compose_with(const SubSolution& sub) const {
        return compose(previous, sub);
    }
    SubSolution implemented(int s) const { return slice(previous, slot, s); }
};

// Mean performance of the other M-1 slots, evaluated on the previously
// implemented solution. Constant across an agent's own options.
double residual_performance(const ResidualContext& ctx, const Landscape& l);

// alpha * own-slot performance of the hypothetical solution built from `s`
// and the frozen residual decisions, plus beta * the observed residual
// performance. Agents know their own payoff structure but can only observe
// (not recompute) the other slots' performance.
double expected_utility(const Agent& a, const SubSolution& s,
                        const ResidualContext& ctx, const Landscape& l,
                        UtilityWeights w);

// The memory entry with the highest expected utility; exact ties are broken
// uniformly at random from the run's stream.
SubSolution choose_solution(const Agent& a, const ResidualContext& ctx,
                            const Landscape& l, UtilityWeights w,
                            SplitMix64& rng);

// With probability p (one Bernoulli draw) adds one unknown sub-solution at
// Hamming distance 1 from the current memory, chosen uniformly. No-op when
// the draw fails or no such candidate exists.
void learn(Agent& a, int s, SplitMix64& rng, double p);

// With probability p (an independent Bernoulli draw) removes the memory
// entry with the lowest expected utility under `ctx`, never the currently
// implemented sub-solution and never the last entry. Ties resolve to the
// lowest bit pattern.
void forget(Agent& a, const ResidualContext& ctx, const Landscape& l,
            UtilityWeights w, SplitMix64& rng, double p);

}  // namespace nkteam
