#pragma once

#include <cstdint>
#include <vector>

#include "domdraw/dag.hpp"
#include "domdraw/drawing.hpp"

namespace domdraw {

enum class QueryMethod { certificate, fallback };

struct QueryResult {
    bool reachable = false;
    QueryMethod method = QueryMethod::certificate;
};

struct IndexStats {
    std::uint64_t queries = 0;
    std::uint64_t certificates = 0;
    std::uint64_t fallbacks = 0;
    // Fallback queries that come back unreachable; these ordered pairs are
    // exactly the falsely implied pairs of the drawing.
    std::uint64_t fallback_fips = 0;
};

// Reachability index backed by a weak dominance drawing: a rank inversion
// in any dimension is a constant-time negative certificate, everything
// else falls back to a pruned traversal.
class ReachIndex {
public:
    ReachIndex(const Dag& g, const Drawing& dr);

    int n() const { return g_.n(); }
    int dims() const { return int(rank_.size()); }

    QueryResult query(int u, int v) const;

    // All ordered pairs (u, v), u != v, queried once.
    IndexStats sweep_stats() const;

private:
    Dag g_;
    std::vector<std::vector<int>> rank_;
};

}  // namespace domdraw
