#pragma once

// Independent oracles for the test suite.  These deliberately avoid the
// library's own machinery: closure by per-vertex BFS over adjacency lists,
// extension enumeration by filtering all permutations, module testing by
// the literal definition.  Values asserted elsewhere were frozen from
// these.

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "domdraw/dag.hpp"
#include "domdraw/drawing.hpp"
#include "domdraw/reachability.hpp"

namespace testhelp {

using domdraw::Dag;
using domdraw::Drawing;

inline std::vector<std::vector<bool>> closure_bfs_oracle(const Dag& g) {
    std::vector<std::vector<bool>> reach(g.n(), std::vector<bool>(g.n(), false));
    for (int s = 0; s < g.n(); ++s) {
        std::queue<int> q;
        q.push(s);
        std::vector<bool> seen(g.n(), false);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.successors(v)) {
                if (seen[w]) continue;
                seen[w] = true;
                reach[s][w] = true;
                q.push(w);
            }
        }
    }
    return reach;
}

// All topological orders by filtering the n! permutations; n <= 8.
inline std::vector<std::vector<int>> perm_filter_extensions(const Dag& g) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> pos(g.n());
        for (int i = 0; i < g.n(); ++i) pos[perm[i]] = i;
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (pos[u] > pos[v]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Literal definition: no outside vertex tells two members apart.
inline bool is_module_oracle(const std::vector<std::vector<bool>>& reach,
                             const std::vector<int>& s) {
    const int n = int(reach.size());
    std::vector<bool> in(n, false);
    for (int v : s) in[v] = true;
    for (int w = 0; w < n; ++w) {
        if (in[w]) continue;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (reach[w][s[i]] != reach[w][s[i + 1]]) return false;
            if (reach[s[i]][w] != reach[s[i + 1]][w]) return false;
        }
    }
    return true;
}

// Literal fip definition on explicit positions.
inline std::vector<std::pair<int, int>> fips_oracle(
    const std::vector<std::vector<bool>>& reach, const Drawing& dr) {
    const int n = int(reach.size());
    std::vector<std::vector<int>> pos(dr.dims(), std::vector<int>(n));
    for (int d = 0; d < dr.dims(); ++d)
        for (int i = 0; i < n; ++i) pos[d][dr.orders[d][i]] = i;
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || reach[u][v] || reach[v][u]) continue;
            bool dominated = true;
            for (int d = 0; d < dr.dims() && dominated; ++d)
                dominated = pos[d][u] < pos[d][v];
            if (dominated) out.emplace_back(u, v);
        }
    return out;
}

// One uniform-ish topological order: random choice among available vertices.
inline std::vector<int> random_extension(const Dag& g, std::mt19937_64& rng) {
    std::vector<int> indeg(g.n()), order;
    for (int v = 0; v < g.n(); ++v) indeg[v] = int(g.predecessors(v).size());
    std::vector<int> avail;
    for (int v = 0; v < g.n(); ++v)
        if (indeg[v] == 0) avail.push_back(v);
    while (!avail.empty()) {
        std::size_t pick = rng() % avail.size();
        int v = avail[pick];
        avail.erase(avail.begin() + pick);
        order.push_back(v);
        for (int w : g.successors(v))
            if (--indeg[w] == 0) avail.push_back(w);
    }
    return order;
}

inline Drawing random_drawing(const Dag& g, int d, std::mt19937_64& rng) {
    Drawing dr;
    for (int i = 0; i < d; ++i) dr.orders.push_back(random_extension(g, rng));
    return dr;
}

}  // namespace testhelp
