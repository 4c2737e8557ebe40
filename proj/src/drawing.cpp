#include "domdraw/drawing.hpp"

#include <algorithm>
#include <stdexcept>

#include "domdraw/bitset.hpp"
#include "domdraw/fips.hpp"
#include "domdraw/md_tree.hpp"

namespace domdraw {

std::vector<std::vector<int>> ranks_of(const Drawing& dr) {
    if (dr.orders.empty()) throw std::invalid_argument("drawing has no dimensions");
    const std::size_t len = dr.orders[0].size();
    int max_id = -1;
    for (const auto& order : dr.orders) {
        if (order.size() != len)
            throw std::invalid_argument("dimensions have different lengths");
        for (int v : order) {
            if (v < 0) throw std::invalid_argument("negative vertex id in drawing");
            max_id = std::max(max_id, v);
        }
    }
    std::vector<std::vector<int>> rank(dr.orders.size(),
                                       std::vector<int>(max_id + 1, -1));
    for (std::size_t d = 0; d < dr.orders.size(); ++d) {
        for (std::size_t i = 0; i < len; ++i) {
            int v = dr.orders[d][i];
            if (rank[d][v] != -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " repeats in dimension " + std::to_string(d));
            rank[d][v] = int(i) + 1;
        }
        if (d > 0)
            for (int v = 0; v <= max_id; ++v)
                if ((rank[d][v] == -1) != (rank[0][v] == -1))
                    throw std::invalid_argument("dimensions range over different vertex sets");
    }
    return rank;
}

namespace {

void require_full(const Dag& g, const Drawing& dr,
                  const std::vector<std::vector<int>>& rank) {
    if (dr.n() != g.n())
        throw std::invalid_argument("drawing covers " + std::to_string(dr.n()) +
                                    " vertices, graph has " + std::to_string(g.n()));
    if (int(rank[0].size()) != g.n())
        throw std::invalid_argument("drawing vertex ids exceed graph size");
}

}  // namespace

std::optional<int> first_invalid_dimension(const Dag& g, const Drawing& dr) {
    auto rank = ranks_of(dr);
    require_full(g, dr, rank);
    for (int d = 0; d < dr.dims(); ++d)
        for (auto [u, v] : g.edges())
            if (rank[d][u] > rank[d][v]) return d;
    return std::nullopt;
}

bool validate(const Dag& g, const Drawing& dr) {
    return !first_invalid_dimension(g, dr).has_value();
}

bool validate(const Dag& g, const Reachability& r, const Drawing& dr) {
    if (r.n() != g.n()) throw std::invalid_argument("graph and closure sizes differ");
    return validate(g, dr);
}

bool is_compact(const Drawing& dr, const std::vector<int>& module) {
    if (module.empty()) throw std::invalid_argument("module is empty");
    auto rank = ranks_of(dr);
    for (int d = 0; d < dr.dims(); ++d) {
        int lo = dr.n() + 1, hi = 0;
        for (int v : module) {
            if (v >= int(rank[d].size()) || rank[d][v] == -1)
                throw std::invalid_argument("module vertex " + std::to_string(v) +
                                            " is not in the drawing");
            lo = std::min(lo, rank[d][v]);
            hi = std::max(hi, rank[d][v]);
        }
        if (hi - lo + 1 != int(module.size())) return false;
    }
    return true;
}

std::vector<int> separator(const Drawing& dr, const std::vector<int>& module, int dim) {
    if (module.empty()) throw std::invalid_argument("module is empty");
    if (dim < 0 || dim >= dr.dims()) throw std::invalid_argument("dimension out of range");
    auto rank = ranks_of(dr);
    int lo = dr.n() + 1, hi = 0;
    std::vector<char> in_module(rank[dim].size(), 0);
    for (int v : module) {
        if (v >= int(rank[dim].size()) || rank[dim][v] == -1)
            throw std::invalid_argument("module vertex " + std::to_string(v) +
                                        " is not in the drawing");
        in_module[v] = 1;
        lo = std::min(lo, rank[dim][v]);
        hi = std::max(hi, rank[dim][v]);
    }
    std::vector<int> out;
    const auto& order = dr.orders[dim];
    for (int pos = lo + 1; pos <= hi - 1; ++pos) {
        int v = order[pos - 1];
        if (!in_module[v]) out.push_back(v);
    }
    return out;
}

Drawing compaction(const Reachability& r, const Drawing& dr,
                   const std::vector<int>& module) {
    auto rank = ranks_of(dr);
    const int n = dr.n();
    if (int(rank[0].size()) != n || r.n() != n)
        throw std::invalid_argument("compaction needs a drawing of the whole graph");
    for (int v = 0; v < n; ++v)
        if (rank[0][v] == -1)
            throw std::invalid_argument("drawing is not a permutation of all vertices");
    if (module.empty()) throw std::invalid_argument("module is empty");
    std::vector<char> in_module(n, 0);
    for (int v : module) {
        if (v < 0 || v >= n) throw std::invalid_argument("module vertex out of range");
        in_module[v] = 1;
    }
    if (!is_module(r, module))
        throw std::invalid_argument("given set is not a module");

    // Pivot: the member with the fewest outer fips, before any move.  This
    // choice is what keeps the total fip count from growing.
    FipReport before = fips(r, dr);
    std::vector<std::int64_t> outer(n, 0);
    for (auto [u, v] : before.fips) {
        if (in_module[u] != in_module[v]) {
            if (in_module[u]) ++outer[u];
            if (in_module[v]) ++outer[v];
        }
    }
    int pivot = -1;
    for (int v : module)
        if (pivot == -1 || outer[v] < outer[pivot] || (outer[v] == outer[pivot] && v < pivot))
            pivot = v;

    // Fixpoint of the adjacent exchanges, built directly: members keep their
    // relative order and pack around the pivot, whose position is unchanged;
    // non-members keep their relative order and fill the remaining cells.
    Drawing out;
    out.orders.resize(dr.dims());
    for (int d = 0; d < dr.dims(); ++d) {
        const auto& order = dr.orders[d];
        const int ppos = rank[d][pivot];
        std::vector<int> low_others, low_members, high_members, high_others;
        for (int pos = 1; pos <= n; ++pos) {
            int v = order[pos - 1];
            if (v == pivot) continue;
            if (pos < ppos)
                (in_module[v] ? low_members : low_others).push_back(v);
            else
                (in_module[v] ? high_members : high_others).push_back(v);
        }
        auto& next = out.orders[d];
        next.reserve(n);
        next.insert(next.end(), low_others.begin(), low_others.end());
        next.insert(next.end(), low_members.begin(), low_members.end());
        next.push_back(pivot);
        next.insert(next.end(), high_members.begin(), high_members.end());
        next.insert(next.end(), high_others.begin(), high_others.end());
    }
    return out;
}

}  // namespace domdraw
