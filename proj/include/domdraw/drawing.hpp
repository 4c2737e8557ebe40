#pragma once

#include <optional>
#include <vector>

#include "domdraw/dag.hpp"
#include "domdraw/reachability.hpp"

namespace domdraw {

// A d-dimensional drawing: one vertex order per dimension.  The coordinate
// of a vertex in a dimension is its 1-based rank in that order.
struct Drawing {
    std::vector<std::vector<int>> orders;

    int dims() const { return int(orders.size()); }
    int n() const { return orders.empty() ? 0 : int(orders[0].size()); }
};

// rank[dim][v], 1-based.  Orders may range over any common vertex subset
// (module drawings do); the map is sized by the largest id, -1 elsewhere.
// Throws std::invalid_argument when the orders are not permutations of one
// common set.
std::vector<std::vector<int>> ranks_of(const Drawing& dr);

// First dimension whose order is not a topological order of g, if any.
// Structural defects (wrong length, not a permutation of 0..n-1) throw.
std::optional<int> first_invalid_dimension(const Dag& g, const Drawing& dr);

// True when every dimension is a topological order of g.
bool validate(const Dag& g, const Drawing& dr);
bool validate(const Dag& g, const Reachability& r, const Drawing& dr);

// True when the module occupies consecutive ranks in every dimension.
bool is_compact(const Drawing& dr, const std::vector<int>& module);

// Non-members lying strictly inside the module's rank span in one dimension.
std::vector<int> separator(const Drawing& dr, const std::vector<int>& module, int dim);

// Slides module vertices together around a pivot member by iterated adjacent
// member/non-member exchanges, independently in every dimension.  The pivot
// is the member with the fewest outer falsely implied pairs (smallest id on
// ties); its coordinates never change, relative orders inside and outside
// the module are preserved, and the total number of falsely implied pairs
// cannot grow.
Drawing compaction(const Reachability& r, const Drawing& dr, const std::vector<int>& module);

}  // namespace domdraw
