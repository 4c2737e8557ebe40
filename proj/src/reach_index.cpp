#include "domdraw/reach_index.hpp"

#include <stdexcept>
#include <vector>

namespace domdraw {

ReachIndex::ReachIndex(const Dag& g, const Drawing& dr) : g_(g) {
    if (!validate(g, dr))
        throw std::invalid_argument("index needs a drawing that is topological in "
                                    "every dimension");
    rank_ = ranks_of(dr);
}

QueryResult ReachIndex::query(int u, int v) const {
    if (u < 0 || u >= n() || v < 0 || v >= n())
        throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("query needs two distinct vertices");
    for (const auto& rank : rank_)
        if (rank[u] > rank[v]) return {false, QueryMethod::certificate};

    // u precedes v everywhere: traverse, skipping vertices the certificate
    // rule already rules out as ancestors of v.
    std::vector<char> seen(n(), 0);
    std::vector<int> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (int x : g_.successors(w)) {
            if (x == v) return {true, QueryMethod::fallback};
            if (seen[x]) continue;
            bool can_reach_v = true;
            for (const auto& rank : rank_)
                if (rank[x] > rank[v]) {
                    can_reach_v = false;
                    break;
                }
            if (!can_reach_v) continue;
            seen[x] = 1;
            stack.push_back(x);
        }
    }
    return {false, QueryMethod::fallback};
}

IndexStats ReachIndex::sweep_stats() const {
    IndexStats stats;
    for (int u = 0; u < n(); ++u)
        for (int v = 0; v < n(); ++v) {
            if (u == v) continue;
            ++stats.queries;
            QueryResult res = query(u, v);
            if (res.method == QueryMethod::certificate) {
                ++stats.certificates;
            } else {
                ++stats.fallbacks;
                if (!res.reachable) ++stats.fallback_fips;
            }
        }
    return stats;
}

}  // namespace domdraw
