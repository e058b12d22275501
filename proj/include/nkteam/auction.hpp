// Second-price auction by which the population self-organizes into a team:
// bid computation, per-slot allocation and payment, and the auction schedule.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "nkteam/agent.hpp"
#include "nkteam/landscape.hpp"
#include "nkteam/rng.hpp"

namespace nkteam {

struct Bid {
    int agent_id = 0;
    int slot = 0;
    double amount = 0.0;  // highest attainable expected utility
};

struct SlotAward {
    int slot = 0;
    int winner_id = 0;
    double payment = 0.0;       // second-highest bid
    std::vector<Bid> bids;      // full record, candidate id ascending
};

struct AuctionOutcome {
    std::vector<SlotAward> slots;  // index == slot
};

// Timesteps at which auctions are held: { t in [1,T] : (t-1) mod (T/tau) == 0 }.
// Exactly tau elements, always containing t=1. Throws unless tau >= 1 and
// tau divides t_horizon.
std::vector<int> auction_times(int t_horizon, int tau);

// The agent's bid: the maximum expected utility over its memory under the
// frozen residual context. Deterministic.
Bid compute_bid(const Agent& a, const ResidualContext& ctx, const Landscape& l,
                UtilityWeights w);

// Settles one slot: highest bidder wins (ties uniform at random), pays the
// second-highest bid. Requires at least two bids.
SlotAward settle_slot(std::vector<Bid> bids, SplitMix64& rng);

// Runs the full auction over all P agents against the previously implemented
// solution. Updates membership flags; payments are recorded for audit only.
// Throws when any slot has fewer than two candidates.
AuctionOutcome run_auction(std::vector<Agent>& population, FullSolution previous,
                           const Landscape& l, UtilityWeights w, SplitMix64& rng);

// Audit log row: one settled slot at one timestep.
struct AuditRow {
    int t = 0;
    SlotAward award;
};

void write_audit_csv(std::ostream& out, std::span<const AuditRow> rows);

}  // namespace nkteam
