#pragma once

#include "domdraw/bitset.hpp"
#include "domdraw/dag.hpp"

namespace domdraw {

// Transitive closure kept as one bit row per vertex in each direction.
// reach(u, u) is false: a vertex is comparable to itself only trivially
// and every consumer here wants strict reachability.
class Reachability {
public:
    Reachability() = default;
    explicit Reachability(int n) : fwd_(n, DynBitset(n)), bwd_(n, DynBitset(n)) {}

    int n() const { return int(fwd_.size()); }

    bool reach(int u, int v) const { return fwd_[u].test(v); }
    bool comparable(int u, int v) const { return reach(u, v) || reach(v, u); }

    const DynBitset& succ_set(int v) const { return fwd_[v]; }
    const DynBitset& pred_set(int v) const { return bwd_[v]; }

    void add(int u, int v) {
        fwd_[u].set(v);
        bwd_[v].set(u);
    }

private:
    std::vector<DynBitset> fwd_;
    std::vector<DynBitset> bwd_;
};

Reachability transitive_closure(const Dag& g);

// Strict: throws if u == v, since (v, v) is neither comparable nor a
// candidate falsely implied pair.
bool incomparable(const Reachability& r, int u, int v);

}  // namespace domdraw
