#include "domdraw/dag.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace domdraw {

Dag::Dag(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
    succ_.resize(n_);
    pred_.resize(n_);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ") out of range for n=" +
                                        std::to_string(n_));
        if (u == v)
            throw std::invalid_argument("self loop at vertex " + std::to_string(u));
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        succ_[u].push_back(v);
        pred_[v].push_back(u);
    }
    for (auto& s : succ_) std::sort(s.begin(), s.end());
    for (auto& p : pred_) std::sort(p.begin(), p.end());

    // Kahn's algorithm; min-heap keeps the canonical order deterministic.
    std::vector<int> indeg(n_);
    for (int v = 0; v < n_; ++v) indeg[v] = int(pred_[v].size());
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) ready.push(v);
    topo_.reserve(n_);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        topo_.push_back(v);
        for (int w : succ_[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (int(topo_.size()) != n_) throw std::invalid_argument("graph contains a cycle");
}

namespace {

int parse_int(std::string_view tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected an integer, got '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Dag parse_edge_list(std::string_view text) {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                     ? text.size() - pos
                                                     : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (n < 0) {
            if (toks.size() != 1)
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": expected the vertex count alone");
            n = parse_int(toks[0], line_no);
        } else {
            if (toks.size() != 2)
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": expected 'u v'");
            edges.emplace_back(parse_int(toks[0], line_no), parse_int(toks[1], line_no));
        }
    }
    if (n < 0) throw std::invalid_argument("missing vertex count line");
    return Dag(n, std::move(edges));
}

std::string write_edge_list(const Dag& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Dag gen_chain(int n) {
    if (n < 1) throw std::invalid_argument("chain needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Dag(n, std::move(edges));
}

Dag gen_antichain(int n) {
    if (n < 1) throw std::invalid_argument("antichain needs at least one vertex");
    return Dag(n, {});
}

Dag gen_crown(int n) {
    if (n < 2) throw std::invalid_argument("crown needs at least two vertices per layer");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) edges.emplace_back(i, n + j);
    return Dag(2 * n, std::move(edges));
}

Dag gen_random_dag(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random dag needs at least one vertex");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw std::invalid_argument("edge probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    // Compare 53 uniform bits against the scaled probability; this keeps the
    // edge set identical across platforms for a given seed.
    const auto threshold = std::uint64_t(edge_prob * 9007199254740992.0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((rng() >> 11) < threshold) edges.emplace_back(i, j);
    return Dag(n, std::move(edges));
}

}  // namespace domdraw
