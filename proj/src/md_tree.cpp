#include "domdraw/md_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "domdraw/errors.hpp"

namespace domdraw {

std::string to_string(MdKind kind) {
    switch (kind) {
        case MdKind::leaf: return "leaf";
        case MdKind::parallel: return "parallel";
        case MdKind::series: return "series";
        case MdKind::prime: return "prime";
    }
    return "unknown";
}

namespace {

void collect_nodes(const MdNode& node, std::vector<const MdNode*>& out) {
    out.push_back(&node);
    for (const auto& c : node.children) collect_nodes(c, out);
}

// True when row splits s: some member inside row, some outside.
bool splits(const DynBitset& row, const DynBitset& s) {
    return row.intersects(s) && !s.is_subset_of(row);
}

bool distinguishes(const Reachability& r, int w, const DynBitset& s) {
    return splits(r.succ_set(w), s) || splits(r.pred_set(w), s);
}

DynBitset full_universe(int n) {
    DynBitset u(n);
    for (int v = 0; v < n; ++v) u.set(v);
    return u;
}

DynBitset minimal_module_bits(const Reachability& r, int u, int v,
                              const DynBitset& universe) {
    DynBitset s(r.n());
    s.set(u);
    s.set(v);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int w = universe.next(0); w >= 0; w = universe.next(w + 1)) {
            if (s.test(w)) continue;
            // Restrict the rows to the universe so outside context is ignored.
            DynBitset fwd = r.succ_set(w);
            fwd &= universe;
            DynBitset bwd = r.pred_set(w);
            bwd &= universe;
            if (splits(fwd, s) || splits(bwd, s)) {
                s.set(w);
                grew = true;
            }
        }
    }
    return s;
}

// Connected components under an adjacency-row functor, restricted to
// members.  Components come back ordered by their smallest vertex.
template <typename RowFn>
std::vector<DynBitset> components(const DynBitset& members, int n, RowFn&& row_of) {
    std::vector<DynBitset> comps;
    DynBitset unseen = members;
    while (unseen.any()) {
        int start = unseen.next(0);
        DynBitset comp(n);
        std::vector<int> stack{start};
        comp.set(start);
        unseen.reset(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            DynBitset adj = row_of(v);
            adj &= unseen;
            adj.for_each([&](int w) {
                comp.set(w);
                unseen.reset(w);
                stack.push_back(w);
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

MdNode build_node(const Reachability& r, const DynBitset& members) {
    MdNode node;
    node.members = members.to_vector();
    if (node.members.size() == 1) {
        node.kind = MdKind::leaf;
        return node;
    }
    const int n = r.n();

    auto comp_row = [&](int v) {
        DynBitset row = r.succ_set(v);
        row |= r.pred_set(v);
        row &= members;
        return row;
    };
    auto comp_parts = components(members, n, comp_row);
    if (comp_parts.size() > 1) {
        node.kind = MdKind::parallel;
        for (const auto& part : comp_parts)
            node.children.push_back(build_node(r, part));
        return node;
    }

    auto incomp_row = [&](int v) {
        DynBitset row = r.succ_set(v);
        row |= r.pred_set(v);
        row.set(v);
        DynBitset out = members;
        out.and_not(row);
        return out;
    };
    auto incomp_parts = components(members, n, incomp_row);
    if (incomp_parts.size() > 1) {
        node.kind = MdKind::series;
        std::sort(incomp_parts.begin(), incomp_parts.end(),
                  [&](const DynBitset& a, const DynBitset& b) {
                      return r.reach(a.next(0), b.next(0));
                  });
        // The blocks of a series node must be totally ordered member-wise.
        for (std::size_t i = 0; i < incomp_parts.size(); ++i)
            for (std::size_t j = i + 1; j < incomp_parts.size(); ++j)
                incomp_parts[i].for_each([&](int a) {
                    if (!incomp_parts[j].is_subset_of(r.succ_set(a)))
                        throw std::logic_error("series blocks are not totally ordered");
                });
        for (const auto& part : incomp_parts)
            node.children.push_back(build_node(r, part));
        return node;
    }

    // Both graphs connected: prime.  Two members share a child exactly when
    // their minimal module within this node is proper.
    node.kind = MdKind::prime;
    DynBitset unclassed = members;
    const int total = members.count();
    while (unclassed.any()) {
        int u = unclassed.next(0);
        DynBitset cls(n);
        cls.set(u);
        unclassed.reset(u);
        for (int v = unclassed.next(0); v >= 0; v = unclassed.next(v + 1)) {
            DynBitset mm = minimal_module_bits(r, u, v, members);
            if (mm.count() != total) {
                cls.set(v);
                unclassed.reset(v);
            }
        }
        node.children.push_back(build_node(r, cls));
    }
    if (node.children.size() == 1)
        throw std::logic_error("prime node collapsed to a single class");
    return node;
}

}  // namespace

int MdTree::k() const {
    int best = 0;
    for (const MdNode* node : nodes())
        best = std::max(best, int(node->children.size()));
    return best;
}

std::vector<const MdNode*> MdTree::nodes() const {
    std::vector<const MdNode*> out;
    collect_nodes(root, out);
    return out;
}

const MdNode* MdTree::find(const std::vector<int>& members) const {
    for (const MdNode* node : nodes())
        if (node->members == members) return node;
    return nullptr;
}

bool is_module(const Reachability& r, const DynBitset& s, const DynBitset& universe) {
    if (!s.any()) return false;
    DynBitset outside = universe;
    outside.and_not(s);
    for (int w = outside.next(0); w >= 0; w = outside.next(w + 1)) {
        DynBitset fwd = r.succ_set(w);
        fwd &= universe;
        DynBitset bwd = r.pred_set(w);
        bwd &= universe;
        if (splits(fwd, s) || splits(bwd, s)) return false;
    }
    return true;
}

bool is_module(const Reachability& r, const std::vector<int>& s) {
    for (int v : s)
        if (v < 0 || v >= r.n()) throw std::invalid_argument("vertex out of range");
    return is_module(r, bitset_of(r.n(), s), full_universe(r.n()));
}

std::vector<int> minimal_module(const Reachability& r, int u, int v,
                                const DynBitset& universe) {
    if (u == v) throw std::invalid_argument("minimal module needs two distinct vertices");
    if (!universe.test(u) || !universe.test(v))
        throw std::invalid_argument("vertices must lie in the universe");
    return minimal_module_bits(r, u, v, universe).to_vector();
}

std::vector<int> minimal_module(const Reachability& r, int u, int v) {
    if (u < 0 || u >= r.n() || v < 0 || v >= r.n())
        throw std::invalid_argument("vertex out of range");
    return minimal_module(r, u, v, full_universe(r.n()));
}

MdTree md_tree(const Dag& g, const Reachability& r) {
    if (g.n() == 0) throw std::invalid_argument("empty graph has no decomposition tree");
    if (g.n() != r.n()) throw std::invalid_argument("graph and closure sizes differ");
    return MdTree{build_node(r, full_universe(g.n()))};
}

int k_parameter(const MdTree& tree) { return tree.k(); }

QuotientGraph quotient_of_modules(const Reachability& r,
                                  const std::vector<std::vector<int>>& blocks) {
    const int n = r.n();
    const int h = int(blocks.size());
    if (h == 0) throw std::invalid_argument("partition is empty");
    DynBitset covered(n);
    std::vector<DynBitset> block_bits;
    DynBitset universe = full_universe(n);
    for (const auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("partition has an empty block");
        DynBitset bits(n);
        for (int v : block) {
            if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
            if (covered.test(v))
                throw std::invalid_argument("partition blocks overlap at vertex " +
                                            std::to_string(v));
            covered.set(v);
            bits.set(v);
        }
        if (!is_module(r, bits, universe))
            throw std::invalid_argument("partition block is not a module");
        block_bits.push_back(std::move(bits));
    }

    // Reachability between blocks is uniform over members; test on one.
    std::vector<DynBitset> super_fwd(h, DynBitset(h)), super_bwd(h, DynBitset(h));
    std::vector<int> rep(h);
    for (int i = 0; i < h; ++i) rep[i] = block_bits[i].next(0);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            if (i != j && r.reach(rep[i], rep[j])) {
                super_fwd[i].set(j);
                super_bwd[j].set(i);
            }

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < h; ++i)
        for (int j = super_fwd[i].next(0); j >= 0; j = super_fwd[i].next(j + 1))
            if (!super_fwd[i].intersects(super_bwd[j])) edges.emplace_back(i, j);

    QuotientGraph q;
    q.dag = Dag(h, std::move(edges));
    q.blocks.reserve(h);
    q.costs.reserve(h);
    for (int i = 0; i < h; ++i) {
        q.blocks.push_back(block_bits[i].to_vector());
        q.costs.push_back(std::int64_t(q.blocks.back().size()));
    }
    return q;
}

QuotientGraph quotient(const Dag& g, const Reachability& r,
                       const std::vector<std::vector<int>>& partition) {
    if (g.n() != r.n()) throw std::invalid_argument("graph and closure sizes differ");
    int covered = 0;
    for (const auto& block : partition) covered += int(block.size());
    QuotientGraph q = quotient_of_modules(r, partition);
    if (covered != g.n())
        throw std::invalid_argument("partition does not cover every vertex");
    return q;
}

ModuleEnumeration enumerate_all_modules(const Reachability& r, int max_n) {
    const int n = r.n();
    if (n > max_n)
        throw bound_error("module enumeration limited to n <= " + std::to_string(max_n) +
                          ", got n = " + std::to_string(n));
    DynBitset universe = full_universe(n);
    std::vector<DynBitset> found;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        DynBitset s(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.set(v);
        if (is_module(r, s, universe)) found.push_back(std::move(s));
    }
    std::vector<std::vector<int>> as_vec;
    as_vec.reserve(found.size());
    for (const auto& s : found) as_vec.push_back(s.to_vector());
    std::vector<std::size_t> idx(found.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (as_vec[a].size() != as_vec[b].size())
            return as_vec[a].size() < as_vec[b].size();
        return as_vec[a] < as_vec[b];
    });

    ModuleEnumeration out;
    for (std::size_t i : idx) out.modules.push_back(as_vec[i]);
    for (std::size_t i : idx) {
        bool strong = true;
        for (std::size_t j = 0; j < found.size() && strong; ++j) {
            if (i == j) continue;
            const DynBitset& a = found[i];
            const DynBitset& b = found[j];
            if (a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a))
                strong = false;
        }
        if (strong) out.strong_modules.push_back(as_vec[i]);
    }
    return out;
}

}  // namespace domdraw
