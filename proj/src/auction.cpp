#include "nkteam/auction.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "nkteam/format.hpp"

namespace nkteam {

std::vector<int> auction_times(int t_horizon, int tau) {
    if (tau < 1) throw std::invalid_argument("auction_times: tau must be at least 1");
    if (t_horizon < 1 || t_horizon % tau != 0)
        throw std::invalid_argument("auction_times: tau must divide t_horizon");
    const int interval = t_horizon / tau;
    std::vector<int> times;
    times.reserve(static_cast<std::size_t>(tau));
    for (int t = 1; t <= t_horizon; t += interval) times.push_back(t);
    return times;
}

Bid compute_bid(const Agent& a, const ResidualContext& ctx, const Landscape& l,
                UtilityWeights w) {
    if (a.memory.empty()) throw std::logic_error("compute_bid: empty memory");
    const int s = l.s();
    const double residual = residual_performance(ctx, l);
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint32_t bits : a.memory) {
        const double own = agent_performance(
            l, ctx.compose_with(SubSolution{a.slot, bits, s}), a.slot);
        const double u = w.alpha * own + w.beta * residual;
        if (u > best) best = u;
    }
    return Bid{a.id, a.slot, best};
}

SlotAward settle_slot(std::vector<Bid> bids, SplitMix64& rng) {
    if (bids.size() < 2)
        throw std::invalid_argument("settle_slot: second price undefined (fewer than two bids)");

    double top = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < bids.size(); ++i) {
        if (bids[i].amount > top) {
            top = bids[i].amount;
            tied.assign(1, i);
        } else if (bids[i].amount == top) {
            tied.push_back(i);
        }
    }
    const std::size_t winner_at =
        tied.size() == 1 ? tied.front() : tied[rng.below(tied.size())];

    double second = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < bids.size(); ++i)
        if (i != winner_at) second = std::max(second, bids[i].amount);

    return SlotAward{bids[winner_at].slot, bids[winner_at].agent_id, second,
                     std::move(bids)};
}

AuctionOutcome run_auction(std::vector<Agent>& population, FullSolution previous,
                           const Landscape& l, UtilityWeights w, SplitMix64& rng) {
    const int m = l.m();
    std::vector<std::vector<std::size_t>> by_slot(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < population.size(); ++i) {
        const int slot = population[i].slot;
        if (slot < 0 || slot >= m)
            throw std::invalid_argument("run_auction: agent slot out of range");
        by_slot[static_cast<std::size_t>(slot)].push_back(i);
    }

    AuctionOutcome out;
    out.slots.reserve(static_cast<std::size_t>(m));
    for (int slot = 0; slot < m; ++slot) {
        auto& candidates = by_slot[static_cast<std::size_t>(slot)];
        if (candidates.size() < 2)
            throw std::invalid_argument(
                "run_auction: second price undefined (fewer than two candidates per slot)");
        std::sort(candidates.begin(), candidates.end(),
                  [&](std::size_t a, std::size_t b) {
                      return population[a].id < population[b].id;
                  });
        std::vector<Bid> bids;
        bids.reserve(candidates.size());
        const ResidualContext ctx{slot, previous};
        for (std::size_t i : candidates)
            bids.push_back(compute_bid(population[i], ctx, l, w));
        out.slots.push_back(settle_slot(std::move(bids), rng));
    }

    for (auto& a : population) a.is_member = false;
    for (const auto& award : out.slots)
        for (auto& a : population)
            if (a.id == award.winner_id) a.is_member = true;
    return out;
}

void write_audit_csv(std::ostream& out, std::span<const AuditRow> rows) {
    out << "t,slot,winner_id,payment,bids\n";
    for (const auto& row : rows) {
        out << row.t << ',' << row.award.slot << ',' << row.award.winner_id << ','
            << format_double(row.award.payment) << ',';
        for (std::size_t i = 0; i < row.award.bids.size(); ++i) {
            if (i) out << ';';
            out << row.award.bids[i].agent_id << ':'
                << format_double(row.award.bids[i].amount);
        }
        out << '\n';
    }
}

}  // namespace nkteam
