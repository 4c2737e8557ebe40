#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "domdraw/dag.hpp"
#include "domdraw/drawing.hpp"
#include "domdraw/md_tree.hpp"
#include "domdraw/reachability.hpp"

namespace domdraw {

struct SearchOptions {
    // Largest graph the exhaustive search accepts, and the decomposition
    // width bound: both cap the factorial blow-up.
    int max_vertices = 9;
    // Budget on extension tuples per exhaustive search.  Wide graphs get a
    // proportionally smaller budget because each tuple costs more to score.
    // The materialized extension list is separately capped at 2^20 entries.
    std::uint64_t max_tuples = 400'000'000;
    // 0 resolves to DOMDRAW_THREADS if set, else the hardware count; the
    // environment variable always caps the effective value.
    int threads = 0;
};

struct OptResult {
    Drawing drawing;
    std::uint64_t cost = 0;
    // Tuples considered, zero-cost subspaces counted wholesale; always
    // (#extensions)^d for a single exhaustive search.
    std::uint64_t explored = 0;
    int k = 0;
    int d = 0;
};

// Exhaustive minimum over all d-tuples of topological orders of h, scored
// by the given vertex costs (empty = unit).  Ties resolve to the
// lexicographically smallest tuple of extension indices, extensions taken
// in lexicographic order.  Throws bound_error when h exceeds max_vertices
// or the tuple space exceeds the budget.
OptResult brute_force_min_cost(const Dag& h, int d,
                               std::span<const std::int64_t> costs = {},
                               const SearchOptions& opts = {});

// Coordinates assignment: lifts a drawing of the quotient plus one drawing
// per block to a drawing of the union.  The coordinate of a vertex is the
// total size of the blocks placed before its block plus its rank inside its
// own block drawing.  costs may be empty; when given they must equal the
// block sizes.
Drawing expand(const Drawing& quotient_drawing, std::span<const std::int64_t> costs,
               const std::vector<Drawing>& module_drawings);

// Same lift, built by concatenating block orders along the quotient order.
// Agrees with expand on every input.
Drawing expand_by_concat(const Drawing& quotient_drawing,
                         const std::vector<Drawing>& module_drawings);

// Minimum-cost drawing of g (unit vertex costs) via the decomposition tree:
// solve each internal node's cost-weighted quotient exhaustively, then lift.
// Total cost is the sum over nodes of their quotient optima.  Throws
// bound_error when the tree width exceeds max_vertices or a node search
// exceeds the tuple budget.
OptResult fpt_min_fips(const Dag& g, int d, const SearchOptions& opts = {});

// For a drawing in which every partition block is compact: checks that the
// outer fip count equals the fip cost of the contracted drawing, and that
// both dominate the quotient optimum.
bool outer_fips_lower_bound_check(const Dag& g, const Reachability& r,
                                  const std::vector<std::vector<int>>& partition,
                                  const Drawing& dr, const SearchOptions& opts = {});

// Weak dominance drawings with zero fips exist in dimension d or not.
bool dominance_dimension_at_most(const Dag& g, int d, const SearchOptions& opts = {});

// Smallest d in 1..d_max with a zero-fip drawing, or nullopt.
std::optional<int> dominance_dimension(const Dag& g, int d_max,
                                       const SearchOptions& opts = {});

}  // namespace domdraw
