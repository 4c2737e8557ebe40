#include <doctest.h>

#include <algorithm>
#include <set>

#include "domdraw/dag.hpp"
#include "domdraw/errors.hpp"
#include "domdraw/md_tree.hpp"
#include "domdraw/reachability.hpp"
#include "helpers.hpp"

using namespace domdraw;

namespace {

Reachability closed(const Dag& g) { return transitive_closure(g); }

// Internal nodes' member sets, as a set of sorted vectors.
std::set<std::vector<int>> internal_member_sets(const MdTree& tree) {
    std::set<std::vector<int>> out;
    for (const MdNode* node : tree.nodes())
        if (!node->children.empty()) out.insert(node->members);
    return out;
}

void check_tree_shape(const Dag& g, const Reachability& r, const MdNode& node) {
    CHECK(is_module(r, node.members));
    CHECK((node.children.empty() == (node.members.size() == 1)));
    if (node.children.empty()) return;
    CHECK(node.children.size() >= 2);

    std::vector<int> merged;
    for (const auto& child : node.children)
        merged.insert(merged.end(), child.members.begin(), child.members.end());
    std::sort(merged.begin(), merged.end());
    CHECK(merged == node.members);

    for (std::size_t i = 0; i < node.children.size(); ++i)
        for (std::size_t j = i + 1; j < node.children.size(); ++j)
            for (int u : node.children[i].members)
                for (int v : node.children[j].members) {
                    if (node.kind == MdKind::parallel) CHECK_FALSE(r.comparable(u, v));
                    if (node.kind == MdKind::series) CHECK(r.reach(u, v));
                }

    if (node.kind == MdKind::prime) {
        // The quotient over children admits only trivial modules.
        std::vector<std::vector<int>> blocks;
        for (const auto& child : node.children) blocks.push_back(child.members);
        QuotientGraph q = quotient_of_modules(r, blocks);
        auto mods = enumerate_all_modules(closed(q.dag), 12);
        for (const auto& mod : mods.modules)
            CHECK((mod.size() == 1 || mod.size() == blocks.size()));
    }
    for (const auto& child : node.children) check_tree_shape(g, r, child);
}

}  // namespace

TEST_SUITE("is_module") {
    TEST_CASE("documented examples") {
        CHECK_FALSE(is_module(closed(gen_chain(3)), {0, 2}));
        CHECK(is_module(closed(gen_antichain(3)), {0, 1}));
        CHECK_FALSE(is_module(closed(gen_crown(3)), {0, 1}));
        CHECK(is_module(closed(gen_chain(3)), {0, 1, 2}));
        CHECK(is_module(closed(gen_chain(3)), {1}));
        CHECK_THROWS_AS(is_module(closed(gen_chain(3)), {5}), std::invalid_argument);
    }

    TEST_CASE("matches the literal definition on every subset") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            Dag g = gen_random_dag(6, 0.2 + 0.1 * double(seed % 5), seed + 50);
            auto oracle_reach = testhelp::closure_bfs_oracle(g);
            Reachability r = closed(g);
            for (unsigned mask = 1; mask < (1u << g.n()); ++mask) {
                std::vector<int> s;
                for (int v = 0; v < g.n(); ++v)
                    if ((mask >> v) & 1) s.push_back(v);
                CHECK(is_module(r, s) == testhelp::is_module_oracle(oracle_reach, s));
            }
        }
    }
}

TEST_SUITE("minimal_module") {
    TEST_CASE("documented examples") {
        CHECK(minimal_module(closed(gen_antichain(3)), 0, 1) == std::vector<int>{0, 1});
        CHECK(minimal_module(closed(gen_chain(3)), 0, 2) == std::vector<int>{0, 1, 2});
        CHECK(minimal_module(closed(gen_crown(3)), 0, 1) ==
              std::vector<int>{0, 1, 2, 3, 4, 5});
        CHECK_THROWS_AS(minimal_module(closed(gen_chain(3)), 1, 1), std::invalid_argument);
    }

    TEST_CASE("result is the inclusion-minimal module containing the seeds") {
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            Dag g = gen_random_dag(6, 0.35, seed + 200);
            Reachability r = closed(g);
            auto all = enumerate_all_modules(r).modules;
            for (int u = 0; u < g.n(); ++u)
                for (int v = u + 1; v < g.n(); ++v) {
                    auto mm = minimal_module(r, u, v);
                    CHECK(is_module(r, mm));
                    CHECK(std::binary_search(mm.begin(), mm.end(), u));
                    CHECK(std::binary_search(mm.begin(), mm.end(), v));
                    for (const auto& mod : all) {
                        bool has_u = std::binary_search(mod.begin(), mod.end(), u);
                        bool has_v = std::binary_search(mod.begin(), mod.end(), v);
                        if (has_u && has_v)
                            CHECK(std::includes(mod.begin(), mod.end(), mm.begin(),
                                                mm.end()));
                    }
                }
        }
    }
}

TEST_SUITE("md_tree") {
    TEST_CASE("documented examples") {
        Dag chain3 = gen_chain(3);
        MdTree t1 = md_tree(chain3, closed(chain3));
        CHECK(t1.root.kind == MdKind::series);
        CHECK(t1.root.children.size() == 3);
        for (const auto& child : t1.root.children) CHECK(child.kind == MdKind::leaf);

        Dag anti3 = gen_antichain(3);
        MdTree t2 = md_tree(anti3, closed(anti3));
        CHECK(t2.root.kind == MdKind::parallel);
        CHECK(t2.root.children.size() == 3);

        Dag crown3 = gen_crown(3);
        MdTree t3 = md_tree(crown3, closed(crown3));
        CHECK(t3.root.kind == MdKind::prime);
        CHECK(t3.root.children.size() == 6);
        CHECK(t3.k() == 6);
    }

    TEST_CASE("k parameter") {
        Dag chain5 = gen_chain(5);
        CHECK(k_parameter(md_tree(chain5, closed(chain5))) == 5);
        Dag one = gen_chain(1);
        CHECK(k_parameter(md_tree(one, closed(one))) == 0);
    }

    TEST_CASE("series children are ordered by the linear sum") {
        Dag chain4 = gen_chain(4);
        MdTree t = md_tree(chain4, closed(chain4));
        REQUIRE(t.root.children.size() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(t.root.children[i].members == std::vector<int>{int(i)});
    }

    TEST_CASE("shape invariants on random graphs") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            Dag g = gen_random_dag(7, 0.15 + 0.12 * double(seed % 6), seed + 300);
            Reachability r = closed(g);
            MdTree tree = md_tree(g, r);
            CHECK(int(tree.root.members.size()) == g.n());
            if (g.n() >= 2) CHECK(tree.k() >= 2);
            check_tree_shape(g, r, tree.root);
        }
    }

    TEST_CASE("internal nodes equal the non-singleton strong modules") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            Dag g = gen_random_dag(6, 0.2 + 0.12 * double(seed % 5), seed + 400);
            Reachability r = closed(g);
            auto strong = enumerate_all_modules(r).strong_modules;
            std::set<std::vector<int>> expected;
            for (auto& s : strong)
                if (s.size() >= 2) expected.insert(s);
            CHECK(internal_member_sets(md_tree(g, r)) == expected);
        }
    }
}

TEST_SUITE("quotient") {
    TEST_CASE("documented examples") {
        Dag chain4 = gen_chain(4);
        QuotientGraph q = quotient(chain4, closed(chain4), {{0, 1}, {2, 3}});
        CHECK(q.dag.n() == 2);
        CHECK(q.dag.edges() == std::vector<std::pair<int, int>>{{0, 1}});
        CHECK(q.costs == std::vector<std::int64_t>{2, 2});

        Dag crown3 = gen_crown(3);
        QuotientGraph qc = quotient(crown3, closed(crown3),
                                    {{0}, {1}, {2}, {3}, {4}, {5}});
        CHECK(qc.dag.n() == 6);
        std::set<std::pair<int, int>> edges(qc.dag.edges().begin(), qc.dag.edges().end());
        std::set<std::pair<int, int>> crown_edges(crown3.edges().begin(),
                                                  crown3.edges().end());
        CHECK(edges == crown_edges);
        CHECK(qc.costs == std::vector<std::int64_t>(6, 1));
    }

    TEST_CASE("edges are a transitive reduction reproducing block comparability") {
        Dag chain4 = gen_chain(4);
        QuotientGraph q = quotient(chain4, closed(chain4), {{0}, {1}, {2}, {3}});
        CHECK(q.dag.edges() ==
              std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Dag g = gen_random_dag(7, 0.4, seed + 500);
            Reachability r = closed(g);
            MdTree tree = md_tree(g, r);
            if (tree.root.children.empty()) continue;
            std::vector<std::vector<int>> blocks;
            for (const auto& child : tree.root.children) blocks.push_back(child.members);
            QuotientGraph q2 = quotient(g, r, blocks);
            std::int64_t total = 0;
            for (auto c : q2.costs) total += c;
            CHECK(total == g.n());
            Reachability qr = closed(q2.dag);
            for (std::size_t i = 0; i < blocks.size(); ++i)
                for (std::size_t j = 0; j < blocks.size(); ++j)
                    if (i != j)
                        CHECK(qr.reach(int(i), int(j)) ==
                              r.reach(blocks[i][0], blocks[j][0]));
        }
    }

    TEST_CASE("rejects bad partitions") {
        Dag chain4 = gen_chain(4);
        Reachability r = closed(chain4);
        CHECK_THROWS_AS(quotient(chain4, r, {{0, 1}, {1, 2}, {3}}), std::invalid_argument);
        CHECK_THROWS_AS(quotient(chain4, r, {{0, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(quotient(chain4, r, {{0, 2}, {1, 3}}), std::invalid_argument);
        CHECK_THROWS_AS(quotient(chain4, r, {}), std::invalid_argument);
    }
}

TEST_SUITE("enumerate_all_modules") {
    TEST_CASE("documented examples") {
        auto anti = enumerate_all_modules(closed(gen_antichain(2)));
        CHECK(anti.modules == std::vector<std::vector<int>>{{0}, {1}, {0, 1}});
        CHECK(anti.strong_modules == anti.modules);

        auto chain = enumerate_all_modules(closed(gen_chain(3)));
        auto has = [&](const std::vector<std::vector<int>>& pool, std::vector<int> s) {
            return std::find(pool.begin(), pool.end(), s) != pool.end();
        };
        CHECK(has(chain.modules, {0, 1}));
        CHECK(has(chain.modules, {1, 2}));
        CHECK_FALSE(has(chain.strong_modules, {0, 1}));
        CHECK_FALSE(has(chain.strong_modules, {1, 2}));
        CHECK(has(chain.strong_modules, {0, 1, 2}));

        auto crown = enumerate_all_modules(closed(gen_crown(3)));
        CHECK(crown.modules.size() == 7);  // 6 singletons + V
        CHECK(crown.strong_modules.size() == 7);
    }

    TEST_CASE("bound is enforced") {
        CHECK_THROWS_AS(enumerate_all_modules(closed(gen_antichain(13))), bound_error);
    }
}
