#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domdraw {

// Directed acyclic graph over vertices 0..n-1.  Construction validates
// id range, rejects self loops and duplicate edges, and fails on cycles.
class Dag {
public:
    Dag() = default;
    Dag(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int m() const { return int(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& successors(int v) const { return succ_.at(v); }
    const std::vector<int>& predecessors(int v) const { return pred_.at(v); }

    // One canonical topological order: smallest available id first.
    const std::vector<int>& topo_order() const { return topo_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<int>> pred_;
    std::vector<int> topo_;
};

// Text format: '#' starts a comment, first data line is the vertex count,
// every following data line is one "u v" edge.  CRLF input is accepted.
Dag parse_edge_list(std::string_view text);
std::string write_edge_list(const Dag& g);

Dag gen_chain(int n);
Dag gen_antichain(int n);

// Two layers a_0..a_{n-1}, b_0..b_{n-1}; edge a_i -> b_j for all i != j.
// Vertices 0..n-1 are the a layer, n..2n-1 the b layer.
Dag gen_crown(int n);

// Each pair (i, j) with i < j becomes an edge with probability edge_prob,
// decided by one draw from mt19937_64(seed) in a fixed (i, j) scan order.
Dag gen_random_dag(int n, double edge_prob, std::uint64_t seed);

}  // namespace domdraw
