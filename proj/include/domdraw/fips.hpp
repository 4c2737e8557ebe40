#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "domdraw/drawing.hpp"
#include "domdraw/reachability.hpp"

namespace domdraw {

// Falsely implied pairs of a drawing: ordered incomparable pairs (u, v)
// where u precedes v in every dimension.  Pairs are listed in ascending
// lexicographic order.
struct FipReport {
    std::vector<std::pair<int, int>> fips;
    std::uint64_t count = 0;
    std::uint64_t cost = 0;
};

// costs may be empty (unit cost per vertex) or one positive weight per
// vertex; the cost of a pair is the product of its endpoint weights.
FipReport fips(const Reachability& r, const Drawing& dr,
               std::span<const std::int64_t> costs = {});

std::uint64_t fip_list_cost(std::span<const std::pair<int, int>> pairs,
                            std::span<const std::int64_t> costs);

// Split of a fip list against a partition: inner pairs have both endpoints
// in one block.
struct FipClassification {
    std::vector<std::uint8_t> inner;  // parallel to report.fips
    std::uint64_t inner_count = 0;
    std::uint64_t outer_count = 0;
};

FipClassification classify_fips(const FipReport& report,
                                const std::vector<std::vector<int>>& partition);

}  // namespace domdraw
