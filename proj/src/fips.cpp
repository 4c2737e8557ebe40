#include "domdraw/fips.hpp"

#include <stdexcept>
#include <string>

namespace domdraw {

namespace {

void check_costs(std::span<const std::int64_t> costs, int n) {
    if (costs.empty()) return;
    if (int(costs.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) +
                                    " vertex costs, got " + std::to_string(costs.size()));
    for (std::int64_t c : costs)
        if (c < 1) throw std::invalid_argument("vertex costs must be positive");
}

std::uint64_t add_pair_cost(std::uint64_t acc, int u, int v,
                            std::span<const std::int64_t> costs) {
    unsigned __int128 sum = acc;
    if (costs.empty())
        sum += 1;
    else
        sum += (unsigned __int128)(std::uint64_t)costs[u] * (std::uint64_t)costs[v];
    if (sum > (unsigned __int128)UINT64_MAX)
        throw std::overflow_error("fip cost exceeds 64 bits");
    return std::uint64_t(sum);
}

}  // namespace

FipReport fips(const Reachability& r, const Drawing& dr,
               std::span<const std::int64_t> costs) {
    auto rank = ranks_of(dr);
    const int n = r.n();
    if (dr.n() != n || int(rank[0].size()) != n)
        throw std::invalid_argument("drawing does not cover the graph's vertex set");
    for (int v = 0; v < n; ++v)
        if (rank[0][v] == -1)
            throw std::invalid_argument("drawing is not a permutation of all vertices");
    check_costs(costs, n);

    FipReport report;
    const int d = dr.dims();
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v || rank[0][u] > rank[0][v]) continue;
            bool dominated = true;
            for (int dim = 1; dim < d && dominated; ++dim)
                dominated = rank[dim][u] < rank[dim][v];
            if (!dominated || r.comparable(u, v)) continue;
            report.fips.emplace_back(u, v);
            report.cost = add_pair_cost(report.cost, u, v, costs);
        }
    }
    report.count = report.fips.size();
    return report;
}

std::uint64_t fip_list_cost(std::span<const std::pair<int, int>> pairs,
                            std::span<const std::int64_t> costs) {
    std::uint64_t acc = 0;
    for (auto [u, v] : pairs) {
        if (!costs.empty() && (u < 0 || u >= int(costs.size()) || v < 0 ||
                               v >= int(costs.size())))
            throw std::invalid_argument("pair endpoint has no cost entry");
        acc = add_pair_cost(acc, u, v, costs);
    }
    return acc;
}

FipClassification classify_fips(const FipReport& report,
                                const std::vector<std::vector<int>>& partition) {
    int max_id = -1;
    for (const auto& block : partition)
        for (int v : block) max_id = std::max(max_id, v);
    std::vector<int> block_of(max_id + 1, -1);
    for (std::size_t b = 0; b < partition.size(); ++b)
        for (int v : partition[b]) {
            if (block_of[v] != -1)
                throw std::invalid_argument("partition blocks overlap at vertex " +
                                            std::to_string(v));
            block_of[v] = int(b);
        }

    FipClassification out;
    out.inner.reserve(report.fips.size());
    for (auto [u, v] : report.fips) {
        if (u > max_id || v > max_id || block_of[u] == -1 || block_of[v] == -1)
            throw std::invalid_argument("fip endpoint missing from the partition");
        bool inner = block_of[u] == block_of[v];
        out.inner.push_back(inner ? 1 : 0);
        if (inner)
            ++out.inner_count;
        else
            ++out.outer_count;
    }
    return out;
}

}  // namespace domdraw
