// NK-style task environment: interdependence structure, random contribution
// tables, solution evaluation and exhaustive optimum search.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "nkteam/rng.hpp"
#include "nkteam/solution.hpp"

namespace nkteam {

// Which other decisions co-determine each decision's contribution.
// The dependency order per row is fixed; it defines table indexing.
struct InteractionMatrix {
    int n_decisions = 0;              // N
    int n_slots = 0;                  // M
    int k = 0;                        // dependencies per decision
    std::vector<std::vector<int>> depends;  // [decision] -> K indices

    int s() const { return n_decisions / n_slots; }
};

// Deterministic stylized structures, blocks of size S = n/m:
//   k <= S-1 : the first k other decisions of the own block (ascending)
//   k  > S-1 : the own block's other S-1 decisions, then cross-block
//              dependencies taken round-robin over the following blocks by
//              position (first decision of each other block, then the
//              second, ...) until k dependencies are collected
// For N=12, M=3 this yields block-diagonal coupling at k=3, the block-mates
// plus the first decision of each other block at k=5, and the full matrix
// at k=11.
InteractionMatrix build_interaction_matrix(int n, int m, int k);

// Contribution lookup tables, one row of 2^(k+1) uniform [0,1) values per
// decision. Immutable after construction.
class Landscape {
public:
    Landscape(InteractionMatrix matrix, std::vector<double> tables);

    int n() const { return matrix_.n_decisions; }
    int m() const { return matrix_.n_slots; }
    int s() const { return matrix_.s(); }
    int k() const { return matrix_.k; }
    std::size_t table_size() const { return table_size_; }

    const InteractionMatrix& matrix() const { return matrix_; }
    std::span<const double> table(int decision) const {
        return {tables_.data() + static_cast<std::size_t>(decision) * table_size_,
                table_size_};
    }

    // Performance contribution of decision `n` under full solution `d`.
    // The table index is the bit string (d_n, d_i1, ..., d_iK) with the own
    // bit most significant and dependencies in row order.
    double contribution(int decision, FullSolution d) const {
        if (static_cast<unsigned>(decision) >=
            static_cast<unsigned>(matrix_.n_decisions))
            throw std::out_of_range("contribution: decision out of range");
        const auto& src = sources_[static_cast<std::size_t>(decision)];
        std::size_t idx = 0;
        for (int pos : src) idx = (idx << 1) | ((d.bits >> pos) & 1u);
        return tables_[offsets_[static_cast<std::size_t>(decision)] + idx];
    }

private:
    InteractionMatrix matrix_;
    std::vector<double> tables_;            // flat, row-major per decision
    std::size_t table_size_ = 0;            // 2^(k+1)
    std::vector<std::size_t> offsets_;      // decision -> flat offset
    std::vector<std::vector<int>> sources_; // decision -> [own, deps...]
};

// Fills all tables from `rng` in a fixed order: decision-major, bit pattern
// ascending. Identical seeds give bit-identical landscapes.
Landscape generate_landscape(const InteractionMatrix& matrix, SplitMix64& rng);

// Mean of the S contributions owned by `slot`, evaluated within `d`.
double agent_performance(const Landscape& l, FullSolution d, int slot);

// Mean of all N contributions; equals the mean of the M slot performances.
double team_performance(const Landscape& l, FullSolution d);

struct OptimumResult {
    FullSolution argmax;
    double value = 0.0;
};

// Exact maximum of team_performance over all 2^N solutions, enumerated in
// ascending encoding so ties resolve to the lowest encoding. Throws when
// n exceeds the exhaustive-search cap.
OptimumResult global_optimum(const Landscape& l, int max_n = 24);

// One record per decision: its dependency indices and full table row.
// Intended for cross-implementation diffing.
void write_landscape_csv(std::ostream& out, const Landscape& l);

}  // namespace nkteam
