// Shared helpers for constructing hand-crafted landscapes and agents.

#pragma once

#include <array>
#include <vector>

#include "nkteam/agent.hpp"
#include "nkteam/landscape.hpp"

namespace nkteam::test {

// K=0 landscape: decision i contributes vals[i][bit].
inline Landscape make_k0_landscape(int n, int m,
                                   const std::vector<std::array<double, 2>>& vals) {
    auto matrix = build_interaction_matrix(n, m, 0);
    std::vector<double> tables;
    tables.reserve(static_cast<std::size_t>(n) * 2);
    for (const auto& v : vals) {
        tables.push_back(v[0]);
        tables.push_back(v[1]);
    }
    return Landscape(std::move(matrix), std::move(tables));
}

// Every table entry equals c: all solutions perform identically.
inline Landscape make_constant_landscape(int n, int m, int k, double c) {
    auto matrix = build_interaction_matrix(n, m, k);
    std::vector<double> tables(
        static_cast<std::size_t>(n) << (k + 1), c);
    return Landscape(std::move(matrix), std::move(tables));
}

inline Agent make_agent(int id, int slot, std::vector<std::uint32_t> memory) {
    return Agent{id, slot, std::move(memory), false};
}

}  // namespace nkteam::test
