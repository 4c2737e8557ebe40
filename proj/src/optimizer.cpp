#include "domdraw/optimizer.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "domdraw/bitset.hpp"
#include "domdraw/errors.hpp"
#include "domdraw/fips.hpp"
#include "domdraw/linear_extensions.hpp"

namespace domdraw {

namespace {

int resolve_threads(int requested) {
    int cap = 0;
    if (const char* env = std::getenv("DOMDRAW_THREADS")) {
        cap = std::atoi(env);
        if (cap < 1) cap = 1;
    }
    int hw = int(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    int t = requested > 0 ? requested : (cap > 0 ? cap : hw);
    if (cap > 0) t = std::min(t, cap);
    return std::max(1, t);
}

void check_costs(std::span<const std::int64_t> costs, int n) {
    if (costs.empty()) return;
    if (int(costs.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) +
                                    " vertex costs, got " + std::to_string(costs.size()));
    for (std::int64_t c : costs)
        if (c < 1) throw std::invalid_argument("vertex costs must be positive");
}

std::uint64_t ipow_capped(std::uint64_t base, int exp, std::uint64_t cap) {
    unsigned __int128 acc = 1;
    for (int i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > cap) return cap + 1;
    }
    return std::uint64_t(acc);
}

// Largest L with L^d <= budget.
std::uint64_t largest_base(std::uint64_t budget, int d) {
    if (d == 1) return budget;
    std::uint64_t lo = 1, hi = budget;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (ipow_capped(mid, d, budget) <= budget)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// Dominance mask over the ordered incomparable pairs, two flavours: a pair
// of words when at most 128 pairs exist, a bit row otherwise.
struct PairMask {
    std::uint64_t a = 0, b = 0;
};

struct SmallOps {
    using Mask = PairMask;
    std::vector<PairMask> masks;  // per extension
    int npairs = 0;

    Mask full() const {
        PairMask m;
        if (npairs >= 64)
            m.a = ~std::uint64_t{0};
        else if (npairs > 0)
            m.a = (std::uint64_t{1} << npairs) - 1;
        if (npairs > 64) {
            int rest = npairs - 64;
            m.b = rest >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rest) - 1;
        }
        return m;
    }
    void and_to(Mask& dst, const Mask& src, std::size_t ext) const {
        dst.a = src.a & masks[ext].a;
        dst.b = src.b & masks[ext].b;
    }
    static bool none(const Mask& m) { return (m.a | m.b) == 0; }
    std::uint64_t score(const Mask& m, const std::vector<std::uint64_t>& weights) const {
        if (weights.empty()) return std::uint64_t(std::popcount(m.a) + std::popcount(m.b));
        std::uint64_t acc = 0;
        for (std::uint64_t w = m.a; w;) {
            acc += weights[std::countr_zero(w)];
            w &= w - 1;
        }
        for (std::uint64_t w = m.b; w;) {
            acc += weights[64 + std::countr_zero(w)];
            w &= w - 1;
        }
        return acc;
    }
};

struct WideOps {
    using Mask = DynBitset;
    std::vector<DynBitset> masks;
    int npairs = 0;

    Mask full() const {
        DynBitset m(npairs);
        for (int i = 0; i < npairs; ++i) m.set(i);
        return m;
    }
    void and_to(Mask& dst, const Mask& src, std::size_t ext) const {
        dst = src;
        dst &= masks[ext];
    }
    static bool none(const Mask& m) { return m.none(); }
    std::uint64_t score(const Mask& m, const std::vector<std::uint64_t>& weights) const {
        if (weights.empty()) return std::uint64_t(m.count());
        std::uint64_t acc = 0;
        m.for_each([&](int p) { acc += weights[p]; });
        return acc;
    }
};

struct BestTuple {
    std::uint64_t cost = ~std::uint64_t{0};
    std::vector<int> idx;
};

template <typename Ops>
struct Searcher {
    const Ops& ops;
    const std::vector<std::uint64_t>& weights;
    int d;
    std::size_t L;
    std::vector<typename Ops::Mask> cum;
    std::vector<int> idx;
    BestTuple best;

    Searcher(const Ops& o, const std::vector<std::uint64_t>& w, int dd, std::size_t l)
        : ops(o), weights(w), d(dd), L(l), cum(dd + 1, o.full()), idx(dd, 0) {}

    void consider(std::uint64_t cost, int filled) {
        if (cost < best.cost) {
            best.cost = cost;
            best.idx.assign(idx.begin(), idx.begin() + filled);
            best.idx.resize(d, 0);
        }
    }

    // Invariant: cum[level] is the AND over the chosen prefix.  An empty
    // mask means every completion scores zero, so the subtree collapses to
    // its lexicographically first tuple.
    void rec(int level, std::size_t lo, std::size_t hi) {
        if (level == d) {
            consider(ops.score(cum[d], weights), d);
            return;
        }
        if (Ops::none(cum[level])) {
            consider(0, level);
            return;
        }
        for (std::size_t i = lo; i < hi; ++i) {
            idx[level] = int(i);
            ops.and_to(cum[level + 1], cum[level], i);
            rec(level + 1, 0, L);
        }
    }
};

template <typename Ops>
BestTuple run_search(const Ops& ops, const std::vector<std::uint64_t>& weights, int d,
                     std::size_t L, std::uint64_t explored, int threads) {
    const bool parallel = threads > 1 && L >= std::size_t(threads) &&
                          explored >= (std::uint64_t{1} << 20);
    if (!parallel) {
        Searcher<Ops> s(ops, weights, d, L);
        s.rec(0, 0, L);
        return std::move(s.best);
    }
    std::vector<BestTuple> results(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            Searcher<Ops> s(ops, weights, d, L);
            s.rec(0, L * t / threads, L * (t + 1) / threads);
            results[t] = std::move(s.best);
        });
    }
    for (auto& th : pool) th.join();
    BestTuple best;
    for (auto& r : results) {
        if (r.idx.empty()) continue;
        if (r.cost < best.cost || (r.cost == best.cost && r.idx < best.idx))
            best = std::move(r);
    }
    return best;
}

std::vector<std::pair<int, int>> incomparable_pairs(const Reachability& r) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < r.n(); ++u)
        for (int v = 0; v < r.n(); ++v)
            if (u != v && !r.comparable(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::uint64_t> pair_weights(const std::vector<std::pair<int, int>>& pairs,
                                        std::span<const std::int64_t> costs) {
    std::vector<std::uint64_t> weights;
    if (costs.empty()) return weights;
    weights.reserve(pairs.size());
    unsigned __int128 total = 0;
    for (auto [u, v] : pairs) {
        unsigned __int128 w =
            (unsigned __int128)(std::uint64_t)costs[u] * (std::uint64_t)costs[v];
        if (w > UINT64_MAX) throw std::overflow_error("pair cost exceeds 64 bits");
        total += w;
        if (total > UINT64_MAX)
            throw std::overflow_error("total fip cost would exceed 64 bits");
        weights.push_back(std::uint64_t(w));
    }
    return weights;
}

}  // namespace

OptResult brute_force_min_cost(const Dag& h, int d, std::span<const std::int64_t> costs,
                               const SearchOptions& opts) {
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    if (h.n() < 1) throw std::invalid_argument("graph must have at least one vertex");
    if (opts.max_tuples < 1) throw std::invalid_argument("tuple budget must be positive");
    if (h.n() > opts.max_vertices)
        throw bound_error("graph has " + std::to_string(h.n()) +
                          " vertices, exhaustive search is bounded at " +
                          std::to_string(opts.max_vertices));
    check_costs(costs, h.n());

    Reachability r = transitive_closure(h);
    auto pairs = incomparable_pairs(r);
    const bool wide = pairs.size() > 128;
    std::uint64_t budget = opts.max_tuples;
    if (wide) {
        std::uint64_t words = (pairs.size() + 63) / 64;
        budget = std::max<std::uint64_t>(1, budget / words);
    }
    // The tuple budget bounds time; the extension list is held in memory, so
    // it gets its own hard cap.  At the default width bound the cap never
    // binds (9! < 2^20); it only cuts off degenerate low-dimension searches.
    constexpr std::uint64_t memory_cap = std::uint64_t(1) << 20;
    const std::uint64_t l_cap = std::min(largest_base(budget, d), memory_cap);

    std::vector<std::vector<int>> exts;
    try {
        exts = all_linear_extensions(h, std::size_t(l_cap));
    } catch (const bound_error&) {
        if (l_cap == memory_cap)
            throw bound_error("extension count exceeds the in-memory enumeration "
                              "bound of " +
                              std::to_string(memory_cap));
        throw bound_error("tuple space exceeds the enumeration budget of " +
                          std::to_string(opts.max_tuples));
    }
    const std::size_t L = exts.size();
    const std::uint64_t explored = ipow_capped(L, d, UINT64_MAX - 1);

    std::vector<std::vector<int>> rank(L, std::vector<int>(h.n()));
    for (std::size_t e = 0; e < L; ++e)
        for (int i = 0; i < h.n(); ++i) rank[e][exts[e][i]] = i;

    auto weights = pair_weights(pairs, costs);
    const int threads = resolve_threads(opts.threads);

    BestTuple best;
    if (!wide) {
        SmallOps ops;
        ops.npairs = int(pairs.size());
        ops.masks.resize(L);
        for (std::size_t e = 0; e < L; ++e) {
            PairMask m;
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if (rank[e][pairs[p].first] < rank[e][pairs[p].second]) {
                    if (p < 64)
                        m.a |= std::uint64_t{1} << p;
                    else
                        m.b |= std::uint64_t{1} << (p - 64);
                }
            ops.masks[e] = m;
        }
        best = run_search(ops, weights, d, L, explored, threads);
    } else {
        WideOps ops;
        ops.npairs = int(pairs.size());
        ops.masks.assign(L, DynBitset(int(pairs.size())));
        for (std::size_t e = 0; e < L; ++e)
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if (rank[e][pairs[p].first] < rank[e][pairs[p].second])
                    ops.masks[e].set(int(p));
        best = run_search(ops, weights, d, L, explored, threads);
    }

    OptResult out;
    out.cost = best.cost;
    out.explored = explored;
    out.k = h.n();
    out.d = d;
    out.drawing.orders.reserve(d);
    for (int dim = 0; dim < d; ++dim) out.drawing.orders.push_back(exts[best.idx[dim]]);
    return out;
}

namespace {

void validate_expand(const Drawing& quotient_drawing, std::span<const std::int64_t> costs,
                     const std::vector<Drawing>& module_drawings) {
    const int h = int(module_drawings.size());
    if (h == 0) throw std::invalid_argument("no block drawings given");
    auto qrank = ranks_of(quotient_drawing);
    if (quotient_drawing.n() != h || int(qrank[0].size()) != h)
        throw std::invalid_argument("quotient drawing must range over blocks 0.." +
                                    std::to_string(h - 1));
    for (int s = 0; s < h; ++s)
        if (qrank[0][s] == -1)
            throw std::invalid_argument("quotient drawing misses block " + std::to_string(s));
    if (!costs.empty() && int(costs.size()) != h)
        throw std::invalid_argument("one cost per block expected");
    std::vector<char> seen;
    for (int s = 0; s < h; ++s) {
        const Drawing& md = module_drawings[s];
        if (md.dims() != quotient_drawing.dims())
            throw std::invalid_argument("block drawing dimension mismatch");
        ranks_of(md);
        if (!costs.empty() && costs[s] != md.n())
            throw std::invalid_argument("block cost does not match its drawing size");
        for (int v : md.orders[0]) {
            if (v >= int(seen.size())) seen.resize(v + 1, 0);
            if (seen[v])
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in two block drawings");
            seen[v] = 1;
        }
    }
}

}  // namespace

Drawing expand(const Drawing& quotient_drawing, std::span<const std::int64_t> costs,
               const std::vector<Drawing>& module_drawings) {
    validate_expand(quotient_drawing, costs, module_drawings);
    const int d = quotient_drawing.dims();
    int total = 0;
    for (const auto& md : module_drawings) total += md.n();

    Drawing out;
    out.orders.assign(d, std::vector<int>(total, -1));
    for (int dim = 0; dim < d; ++dim) {
        // Offset of a block: total size of the blocks placed before it.
        int acc = 0;
        std::vector<int> offset(module_drawings.size());
        for (int s : quotient_drawing.orders[dim]) {
            offset[s] = acc;
            acc += module_drawings[s].n();
        }
        for (std::size_t s = 0; s < module_drawings.size(); ++s) {
            const auto& inner = module_drawings[s].orders[dim];
            for (std::size_t x = 0; x < inner.size(); ++x) {
                int coord = offset[s] + int(x) + 1;
                out.orders[dim][coord - 1] = inner[x];
            }
        }
    }
    return out;
}

Drawing expand_by_concat(const Drawing& quotient_drawing,
                         const std::vector<Drawing>& module_drawings) {
    validate_expand(quotient_drawing, {}, module_drawings);
    Drawing out;
    out.orders.resize(quotient_drawing.dims());
    for (int dim = 0; dim < quotient_drawing.dims(); ++dim)
        for (int s : quotient_drawing.orders[dim]) {
            const auto& inner = module_drawings[s].orders[dim];
            out.orders[dim].insert(out.orders[dim].end(), inner.begin(), inner.end());
        }
    return out;
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s;
    if (__builtin_add_overflow(a, b, &s))
        throw std::overflow_error("fip cost exceeds 64 bits");
    return s;
}

struct NodeResult {
    Drawing drawing;
    std::uint64_t cost = 0;
};

NodeResult solve_node(const MdNode& node, const Reachability& r, int d,
                      const SearchOptions& opts, std::uint64_t& explored) {
    if (node.children.empty()) {
        NodeResult out;
        out.drawing.orders.assign(d, {node.members[0]});
        return out;
    }
    std::vector<Drawing> child_drawings;
    std::uint64_t child_cost = 0;
    std::vector<std::vector<int>> blocks;
    for (const MdNode& child : node.children) {
        NodeResult sub = solve_node(child, r, d, opts, explored);
        child_drawings.push_back(std::move(sub.drawing));
        child_cost = checked_add(child_cost, sub.cost);
        blocks.push_back(child.members);
    }
    QuotientGraph q = quotient_of_modules(r, blocks);
    OptResult qr = brute_force_min_cost(q.dag, d, q.costs, opts);
    explored += qr.explored;

    NodeResult out;
    out.drawing = expand(qr.drawing, q.costs, child_drawings);
    out.cost = checked_add(child_cost, qr.cost);
    return out;
}

}  // namespace

OptResult fpt_min_fips(const Dag& g, int d, const SearchOptions& opts) {
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    if (g.n() < 1) throw std::invalid_argument("graph must have at least one vertex");
    Reachability r = transitive_closure(g);
    MdTree tree = md_tree(g, r);
    const int k = tree.k();
    if (k > opts.max_vertices)
        throw bound_error("decomposition width k=" + std::to_string(k) +
                          " exceeds the bound of " + std::to_string(opts.max_vertices));
    std::uint64_t explored = 0;
    NodeResult root = solve_node(tree.root, r, d, opts, explored);

    OptResult out;
    out.drawing = std::move(root.drawing);
    out.cost = root.cost;
    out.explored = explored;
    out.k = k;
    out.d = d;
    return out;
}

bool outer_fips_lower_bound_check(const Dag& g, const Reachability& r,
                                  const std::vector<std::vector<int>>& partition,
                                  const Drawing& dr, const SearchOptions& opts) {
    if (!validate(g, dr))
        throw std::invalid_argument("drawing is not topological in every dimension");
    QuotientGraph q = quotient(g, r, partition);
    for (const auto& block : q.blocks)
        if (!is_compact(dr, block))
            throw std::invalid_argument("partition block is not compact in the drawing");

    FipReport report = fips(r, dr);
    std::uint64_t outer = classify_fips(report, partition).outer_count;

    // Contract each block to its quotient vertex, ordering blocks by the
    // rank of their first member in each dimension.
    auto rank = ranks_of(dr);
    Drawing contracted;
    contracted.orders.resize(dr.dims());
    for (int dim = 0; dim < dr.dims(); ++dim) {
        std::vector<std::pair<int, int>> firsts;
        for (std::size_t s = 0; s < q.blocks.size(); ++s) {
            int lo = dr.n() + 1;
            for (int v : q.blocks[s]) lo = std::min(lo, rank[dim][v]);
            firsts.emplace_back(lo, int(s));
        }
        std::sort(firsts.begin(), firsts.end());
        for (auto [pos, s] : firsts) contracted.orders[dim].push_back(s);
    }
    Reachability qr = transitive_closure(q.dag);
    std::uint64_t contracted_cost = fips(qr, contracted, q.costs).cost;
    std::uint64_t optimum = brute_force_min_cost(q.dag, dr.dims(), q.costs, opts).cost;
    return contracted_cost == outer && outer >= optimum;
}

bool dominance_dimension_at_most(const Dag& g, int d, const SearchOptions& opts) {
    return fpt_min_fips(g, d, opts).cost == 0;
}

std::optional<int> dominance_dimension(const Dag& g, int d_max, const SearchOptions& opts) {
    if (d_max < 1) throw std::invalid_argument("dimension limit must be at least 1");
    for (int d = 1; d <= d_max; ++d)
        if (dominance_dimension_at_most(g, d, opts)) return d;
    return std::nullopt;
}

}  // namespace domdraw
