#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "domdraw/bitset.hpp"
#include "domdraw/dag.hpp"
#include "domdraw/reachability.hpp"

namespace domdraw {

enum class MdKind { leaf, parallel, series, prime };

std::string to_string(MdKind kind);

struct MdNode {
    MdKind kind = MdKind::leaf;
    std::vector<int> members;  // sorted ascending
    std::vector<MdNode> children;
};

struct MdTree {
    MdNode root;

    // Width parameter: the largest child count over internal nodes.
    int k() const;

    // Preorder walk over all nodes.
    std::vector<const MdNode*> nodes() const;

    // Node with exactly this member set (sorted), or nullptr.
    const MdNode* find(const std::vector<int>& members) const;
};

// A set S is a module when no outside vertex distinguishes two members,
// in either reachability direction.  The universe overload restricts both
// the candidate set and the outside to an induced subposet.
bool is_module(const Reachability& r, const std::vector<int>& s);
bool is_module(const Reachability& r, const DynBitset& s, const DynBitset& universe);

// Smallest module containing both u and v: closure under adding every
// distinguishing vertex until none remains.
std::vector<int> minimal_module(const Reachability& r, int u, int v);
std::vector<int> minimal_module(const Reachability& r, int u, int v,
                                const DynBitset& universe);

MdTree md_tree(const Dag& g, const Reachability& r);
int k_parameter(const MdTree& tree);

// Quotient over a congruence partition.  Edges are the transitive
// reduction of the induced order on blocks; costs are block sizes.
struct QuotientGraph {
    Dag dag;
    std::vector<std::int64_t> costs;
    std::vector<std::vector<int>> blocks;
};

QuotientGraph quotient(const Dag& g, const Reachability& r,
                       const std::vector<std::vector<int>>& partition);

// Same structure over pairwise disjoint modules that need not cover the
// whole vertex set (the per-node step of the optimizer).
QuotientGraph quotient_of_modules(const Reachability& r,
                                  const std::vector<std::vector<int>>& blocks);

// Every module (trivial ones included) plus the strong subset, for small n.
struct ModuleEnumeration {
    std::vector<std::vector<int>> modules;
    std::vector<std::vector<int>> strong_modules;
};

ModuleEnumeration enumerate_all_modules(const Reachability& r, int max_n = 12);

}  // namespace domdraw
