#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "nkteam/agent.hpp"
#include "nkteam/rng.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace nkteam;
using namespace nkteam::test;

namespace {

Landscape random_landscape(int n, int m, int k, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return generate_landscape(build_interaction_matrix(n, m, k), rng);
}

}  // namespace

TEST_CASE("utility weights must sum to one") {
    CHECK_NOTHROW(UtilityWeights(0.5, 0.5));
    CHECK_NOTHROW(UtilityWeights(1.0, 0.0));
    CHECK_THROWS_AS(UtilityWeights(0.7, 0.2), std::invalid_argument);
}

TEST_CASE("init_agent: endowment size, distinctness and range") {
    SplitMix64 rng(1);
    const auto near_full = init_agent(0, 1, 4, 15, rng);
    CHECK(near_full.memory.size() == 15);
    CHECK(std::is_sorted(near_full.memory.begin(), near_full.memory.end()));
    std::set<std::uint32_t> uniq(near_full.memory.begin(), near_full.memory.end());
    CHECK(uniq.size() == 15);
    for (auto bits : uniq) CHECK(bits < 16);

    const auto singleton = init_agent(1, 0, 4, 1, rng);
    CHECK(singleton.memory.size() == 1);
}

TEST_CASE("init_agent: deterministic per seed") {
    SplitMix64 a(42), b(42);
    CHECK(init_agent(0, 0, 4, 6, a).memory == init_agent(0, 0, 4, 6, b).memory);
}

TEST_CASE("init_agent: rejects q outside [1, 2^s)") {
    SplitMix64 rng(2);
    CHECK_THROWS_AS(init_agent(0, 0, 4, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(init_agent(0, 0, 4, 16, rng), std::invalid_argument);
}

TEST_CASE("expected_utility: weighted own and residual performance") {
    // Slot performances are constant: 0.6 (own), 0.4 and 0.8 (others).
    std::vector<std::array<double, 2>> vals;
    for (int i = 0; i < 4; ++i) vals.push_back({0.6, 0.6});
    for (int i = 0; i < 4; ++i) vals.push_back({0.4, 0.4});
    for (int i = 0; i < 4; ++i) vals.push_back({0.8, 0.8});
    const auto l = make_k0_landscape(12, 3, vals);
    const auto agent = make_agent(0, 0, {0b0000});
    const ResidualContext ctx{0, FullSolution{0, 12}};
    const SubSolution s{0, 0b1010, 4};

    CHECK(expected_utility(agent, s, ctx, l, UtilityWeights(0.5, 0.5)) ==
          doctest::Approx(0.6).epsilon(1e-15));
    CHECK(expected_utility(agent, s, ctx, l, UtilityWeights(1.0, 0.0)) ==
          agent_performance(l, ctx.compose_with(s), 0));
}

TEST_CASE("expected_utility: rejects slot mismatch") {
    const auto l = make_constant_landscape(12, 3, 0, 0.5);
    const auto agent = make_agent(0, 0, {0});
    const ResidualContext ctx{0, FullSolution{0, 12}};
    CHECK_THROWS_AS(
        expected_utility(agent, SubSolution{1, 0, 4}, ctx, l, UtilityWeights(0.5, 0.5)),
        std::invalid_argument);
}

TEST_CASE("mean utility over the team equals team performance at alpha=beta=0.5") {
    const UtilityWeights w(0.5, 0.5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto l = random_landscape(12, 3, 5, 300 + trial);
        SplitMix64 rng(400 + trial);
        const FullSolution d{static_cast<std::uint32_t>(rng.next() & 0xFFFu), 12};
        double mean_u = 0.0;
        for (int slot = 0; slot < 3; ++slot) {
            const auto agent = make_agent(slot, slot, {slice(d, slot, 4).bits});
            const ResidualContext ctx{slot, d};
            mean_u += expected_utility(agent, slice(d, slot, 4), ctx, l, w);
        }
        mean_u /= 3.0;
        CHECK(mean_u == doctest::Approx(team_performance(l, d)).epsilon(1e-12));
    }
}

TEST_CASE("choose_solution: singleton memory returns that entry") {
    const auto l = random_landscape(12, 3, 3, 500);
    const auto agent = make_agent(0, 1, {0b0110});
    const ResidualContext ctx{1, FullSolution{0b111000111000, 12}};
    SplitMix64 rng(1);
    const auto pick = choose_solution(agent, ctx, l, UtilityWeights(0.5, 0.5), rng);
    CHECK(pick.bits == 0b0110);
    CHECK(pick.slot == 1);
}

TEST_CASE("choose_solution: finds the context-conditional optimum when known") {
    const UtilityWeights w(0.5, 0.5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto l = random_landscape(12, 3, 5, 600 + trial);
        SplitMix64 rng(700 + trial);
        const FullSolution prev{static_cast<std::uint32_t>(rng.next() & 0xFFFu), 12};
        const int slot = static_cast<int>(rng.below(3));

        // Brute force over all 16 sub-solutions with the independent oracle.
        std::vector<std::uint32_t> all(16);
        for (std::uint32_t i = 0; i < 16; ++i) all[i] = i;
        const auto best =
            oracle_best_in_memory(l, all, prev.bits, slot, w.alpha, w.beta);

        std::vector<std::uint32_t> memory{best};
        while (memory.size() < 4) {
            const auto extra = static_cast<std::uint32_t>(rng.below(16));
            if (std::find(memory.begin(), memory.end(), extra) == memory.end())
                memory.push_back(extra);
        }
        std::sort(memory.begin(), memory.end());
        const auto agent = make_agent(0, slot, memory);
        const ResidualContext ctx{slot, prev};
        CHECK(choose_solution(agent, ctx, l, w, rng).bits == best);
    }
}

TEST_CASE("choose_solution: always returns a memory entry") {
    const UtilityWeights w(0.5, 0.5);
    SplitMix64 rng(650);
    for (int trial = 0; trial < 100; ++trial) {
        const auto l = random_landscape(12, 3, trial % 2 ? 11 : 5, 1300 + trial);
        const int slot = static_cast<int>(rng.below(3));
        auto agent = init_agent(0, slot, 4, 1 + static_cast<int>(rng.below(15)), rng);
        const ResidualContext ctx{
            slot, FullSolution{static_cast<std::uint32_t>(rng.next() & 0xFFFu), 12}};
        const auto pick = choose_solution(agent, ctx, l, w, rng);
        CHECK(std::find(agent.memory.begin(), agent.memory.end(), pick.bits) !=
              agent.memory.end());
        CHECK(pick.slot == slot);
    }
}

TEST_CASE("choose_solution: exact ties split uniformly") {
    const auto l = make_constant_landscape(12, 3, 3, 0.5);
    const auto agent = make_agent(0, 0, {0b0001, 0b1000});
    const ResidualContext ctx{0, FullSolution{0, 12}};
    const UtilityWeights w(0.5, 0.5);
    int first = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        SplitMix64 rng(9000 + trial);
        if (choose_solution(agent, ctx, l, w, rng).bits == 0b0001) ++first;
    }
    CHECK(first / 10000.0 == doctest::Approx(0.5).epsilon(0.1));
    CHECK(std::abs(first / 10000.0 - 0.5) < 0.05);
}

TEST_CASE("learn: p=0 never changes memory") {
    auto agent = make_agent(0, 0, {0b0000, 0b1111});
    for (int i = 0; i < 200; ++i) {
        SplitMix64 rng(i);
        learn(agent, 4, rng, 0.0);
    }
    CHECK(agent.memory == std::vector<std::uint32_t>{0b0000, 0b1111});
}

TEST_CASE("learn: full memory is a no-op even on success") {
    std::vector<std::uint32_t> full(16);
    for (std::uint32_t i = 0; i < 16; ++i) full[i] = i;
    auto agent = make_agent(0, 0, full);
    SplitMix64 rng(3);
    learn(agent, 4, rng, 1.0);
    CHECK(agent.memory.size() == 16);
}

TEST_CASE("learn: hamming-1 neighbours picked uniformly") {
    std::map<std::uint32_t, int> counts;
    for (int trial = 0; trial < 10000; ++trial) {
        auto agent = make_agent(0, 0, {0b0000});
        SplitMix64 rng(20000 + trial);
        learn(agent, 4, rng, 1.0);
        REQUIRE(agent.memory.size() == 2);
        const auto added = agent.memory[0] == 0 ? agent.memory[1] : agent.memory[0];
        ++counts[added];
    }
    REQUIRE(counts.size() == 4);
    for (auto bits : {0b0001u, 0b0010u, 0b0100u, 0b1000u}) {
        CHECK(counts.count(bits) == 1);
        CHECK(std::abs(counts[bits] / 10000.0 - 0.25) < 0.05);
    }
}

TEST_CASE("learn: never adds an already-known entry, adds at most one") {
    auto agent = make_agent(0, 0, {0b0101});
    SplitMix64 rng(4);
    for (int step = 0; step < 500; ++step) {
        const auto before = agent.memory.size();
        learn(agent, 4, rng, 0.8);
        CHECK(agent.memory.size() <= before + 1);
        CHECK(std::is_sorted(agent.memory.begin(), agent.memory.end()));
        CHECK(std::adjacent_find(agent.memory.begin(), agent.memory.end()) ==
              agent.memory.end());
        for (auto bits : agent.memory) CHECK(bits < 16);
    }
}

TEST_CASE("forget: p=0 and singleton memory are no-ops") {
    const auto l = random_landscape(12, 3, 3, 800);
    const ResidualContext ctx{0, FullSolution{0, 12}};
    const UtilityWeights w(0.5, 0.5);

    auto agent = make_agent(0, 0, {0b0001, 0b0010});
    SplitMix64 rng(5);
    forget(agent, ctx, l, w, rng, 0.0);
    CHECK(agent.memory.size() == 2);

    auto single = make_agent(0, 0, {0b0001});
    forget(single, ctx, l, w, rng, 1.0);
    CHECK(single.memory.size() == 1);
}

TEST_CASE("forget: drops the lowest-utility entry, implemented protected") {
    // Utilities with alpha=1: 0b0000 -> 0.2, 0b0011 -> 0.5, 0b1111 -> 0.9.
    std::vector<std::array<double, 2>> vals(12, {0.5, 0.5});
    vals[0] = {0.2, 0.8};
    vals[1] = {0.2, 0.8};
    vals[2] = {0.2, 1.0};
    vals[3] = {0.2, 1.0};
    const auto l = make_k0_landscape(12, 3, vals);
    const UtilityWeights w(1.0, 0.0);

    auto agent = make_agent(0, 0, {0b0000, 0b0011, 0b1111});
    const ResidualContext ctx{0, FullSolution{0b1111, 12}};  // implemented = 0b1111

    const double u_low = expected_utility(agent, SubSolution{0, 0b0000, 4}, ctx, l, w);
    const double u_mid = expected_utility(agent, SubSolution{0, 0b0011, 4}, ctx, l, w);
    const double u_impl = expected_utility(agent, SubSolution{0, 0b1111, 4}, ctx, l, w);
    CHECK(u_low == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(u_mid == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(u_impl == doctest::Approx(0.9).epsilon(1e-15));

    SplitMix64 rng(6);
    forget(agent, ctx, l, w, rng, 1.0);
    CHECK(agent.memory == std::vector<std::uint32_t>{0b0011, 0b1111});
}

TEST_CASE("forget: never removes the implemented entry, never empties") {
    const auto l = random_landscape(12, 3, 5, 900);
    const UtilityWeights w(0.5, 0.5);
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const FullSolution prev{static_cast<std::uint32_t>(rng.next() & 0xFFFu), 12};
        const int slot = static_cast<int>(rng.below(3));
        const auto implemented = slice(prev, slot, 4).bits;
        auto agent = init_agent(0, slot, 4, 1 + static_cast<int>(rng.below(15)), rng);
        const ResidualContext ctx{slot, prev};
        const bool had_implemented =
            std::find(agent.memory.begin(), agent.memory.end(), implemented) !=
            agent.memory.end();
        forget(agent, ctx, l, w, rng, 1.0);
        CHECK(agent.memory.size() >= 1);
        if (had_implemented)
            CHECK(std::find(agent.memory.begin(), agent.memory.end(), implemented) !=
                  agent.memory.end());
    }
}
