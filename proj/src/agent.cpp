#include "nkteam/agent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nkteam {

UtilityWeights::UtilityWeights(double a, double b) : alpha(a), beta(b) {
    if (std::abs(alpha + beta - 1.0) > 1e-9)
        throw std::invalid_argument("alpha+beta must equal 1");
}

Agent init_agent(int id, int slot, int s, int q, SplitMix64& rng) {
    if (s < 1 || s > 24) throw std::invalid_argument("init_agent: s must lie in [1, 24]");
    const std::uint32_t pool_size = 1u << s;
    if (q < 1 || static_cast<std::uint32_t>(q) >= pool_size)
        throw std::invalid_argument("init_agent: q must lie in [1, 2^s)");

    // Partial Fisher-Yates over all 2^s patterns, q draws.
    std::vector<std::uint32_t> pool(pool_size);
    std::iota(pool.begin(), pool.end(), 0u);
    for (int i = 0; i < q; ++i) {
        const std::size_t pick = i + rng.below(pool_size - i);
        std::swap(pool[static_cast<std::size_t>(i)], pool[pick]);
    }
    Agent a{id, slot, {pool.begin(), pool.begin() + q}, false};
    std::sort(a.memory.begin(), a.memory.end());
    return a;
}

double residual_performance(const ResidualContext& ctx, const Landscape& l) {
    const int m = l.m();
    if (m < 2) return 0.0;
    double sum = 0.0;
    for (int r = 0; r < m; ++r)
        if (r != ctx.slot) sum += agent_performance(l, ctx.previous, r);
    return sum / (m - 1);
}

double expected_utility(const Agent& a, const SubSolution& sub,
                        const ResidualContext& ctx, const Landscape& l,
                        UtilityWeights w) {
    if (sub.slot != a.slot || ctx.slot != a.slot)
        throw std::invalid_argument("expected_utility: slot mismatch");
    // Own performance is evaluated on the hypothetical solution: the agent
    // knows its own payoff structure and the frozen residual decisions. The
    // residual term is the other slots' performance as last observed; agents
    // cannot evaluate the other agents' payoffs counterfactually.
    const double own = agent_performance(l, ctx.compose_with(sub), a.slot);
    return w.alpha * own + w.beta * residual_performance(ctx, l);
}

namespace {

// Hot-path form of expected_utility with the context-constant residual term
// precomputed; produces bit-identical values.
inline double utility_with_residual(const Landscape& l, const ResidualContext& ctx,
                                    std::uint32_t bits, int slot, UtilityWeights w,
                                    double residual) {
    const double own = agent_performance(
        l, ctx.compose_with(SubSolution{slot, bits, l.s()}), slot);
    return w.alpha * own + w.beta * residual;
}

}  // namespace

SubSolution choose_solution(const Agent& a, const ResidualContext& ctx,
                            const Landscape& l, UtilityWeights w,
                            SplitMix64& rng) {
    if (a.memory.empty())
        throw std::logic_error("choose_solution: empty memory");
    const int s = l.s();
    const double residual = residual_performance(ctx, l);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> tied;
    for (std::uint32_t bits : a.memory) {
        const double u = utility_with_residual(l, ctx, bits, a.slot, w, residual);
        if (u > best) {
            best = u;
            tied.assign(1, bits);
        } else if (u == best) {
            tied.push_back(bits);
        }
    }
    const std::uint32_t pick =
        tied.size() == 1 ? tied.front() : tied[rng.below(tied.size())];
    return SubSolution{a.slot, pick, s};
}

void learn(Agent& a, int s, SplitMix64& rng, double p) {
    const bool fire = rng.bernoulli(p);  // exactly one draw, always
    if (!fire) return;

    // Candidates: Hamming-1 neighbours of any known entry, minus the known set.
    std::vector<std::uint32_t> candidates;
    candidates.reserve(a.memory.size() * static_cast<std::size_t>(s));
    for (std::uint32_t bits : a.memory)
        for (int b = 0; b < s; ++b) candidates.push_back(bits ^ (1u << b));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::vector<std::uint32_t> fresh;
    fresh.reserve(candidates.size());
    std::set_difference(candidates.begin(), candidates.end(), a.memory.begin(),
                        a.memory.end(), std::back_inserter(fresh));
    if (fresh.empty()) return;

    const std::uint32_t pick = fresh[rng.below(fresh.size())];
    a.memory.insert(std::lower_bound(a.memory.begin(), a.memory.end(), pick),
                    pick);
}

void forget(Agent& a, const ResidualContext& ctx, const Landscape& l,
            UtilityWeights w, SplitMix64& rng, double p) {
    const bool fire = rng.bernoulli(p);  // exactly one draw, always
    if (!fire || a.memory.size() <= 1) return;

    const int s = l.s();
    const std::uint32_t implemented = ctx.implemented(s).bits;
    const double residual = residual_performance(ctx, l);
    double worst = std::numeric_limits<double>::infinity();
    std::ptrdiff_t worst_at = -1;
    for (std::size_t i = 0; i < a.memory.size(); ++i) {
        const std::uint32_t bits = a.memory[i];
        if (bits == implemented) continue;
        const double u = utility_with_residual(l, ctx, bits, a.slot, w, residual);
        if (u < worst) {  // strict: ties keep the lowest bit pattern
            worst = u;
            worst_at = static_cast<std::ptrdiff_t>(i);
        }
    }
    if (worst_at >= 0) a.memory.erase(a.memory.begin() + worst_at);
}

}  // namespace nkteam
