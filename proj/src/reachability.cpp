#include "domdraw/reachability.hpp"

#include <stdexcept>

namespace domdraw {

Reachability transitive_closure(const Dag& g) {
    Reachability r(g.n());
    const auto& topo = g.topo_order();
    // Reverse topological sweep: a row is the union of successor rows.
    std::vector<DynBitset> rows(g.n(), DynBitset(g.n()));
    for (int i = g.n() - 1; i >= 0; --i) {
        int v = topo[i];
        for (int w : g.successors(v)) {
            rows[v].set(w);
            rows[v] |= rows[w];
        }
    }
    for (int v = 0; v < g.n(); ++v)
        rows[v].for_each([&](int w) { r.add(v, w); });
    return r;
}

bool incomparable(const Reachability& r, int u, int v) {
    if (u < 0 || u >= r.n() || v < 0 || v >= r.n())
        throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("incomparability is defined on distinct vertices");
    return !r.comparable(u, v);
}

}  // namespace domdraw
