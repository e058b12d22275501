// Binary decision vectors.
//
// A FullSolution is the complete N-bit string; decision n (0-based) is
// stored at bit position n, so the integer value of `bits` doubles as the
// canonical encoding used for deterministic tie-breaking and enumeration
// (decision 0 is the least significant bit).
//
// A SubSolution is one slot's S-bit block; bit j of `bits` is the j-th
// decision inside the block. Slot m owns decisions [m*S, (m+1)*S).

#pragma once

#include <cstdint>

namespace nkteam {

struct FullSolution {
    std::uint32_t bits = 0;
    int n = 0;

    int bit(int decision) const { return (bits >> decision) & 1u; }
    std::uint32_t encoding() const { return bits; }

    friend bool operator==(const FullSolution&, const FullSolution&) = default;
};

struct SubSolution {
    int slot = 0;
    std::uint32_t bits = 0;
    int s = 0;

    int bit(int j) const { return (bits >> j) & 1u; }

    friend bool operator==(const SubSolution&, const SubSolution&) = default;
};

inline std::uint32_t low_mask(int width) {
    return width >= 32 ? 0xFFFFFFFFu : ((1u << width) - 1u);
}

// Overlays a slot's sub-solution onto a full solution.
inline FullSolution compose(FullSolution base, const SubSolution& sub) {
    const int offset = sub.slot * sub.s;
    const std::uint32_t slot_mask = low_mask(sub.s) << offset;
    base.bits = (base.bits & ~slot_mask) | (sub.bits << offset);
    return base;
}

// Extracts slot `slot` (of width s) from a full solution.
inline SubSolution slice(const FullSolution& d, int slot, int s) {
    return SubSolution{slot, (d.bits >> (slot * s)) & low_mask(s), s};
}

}  // namespace nkteam
