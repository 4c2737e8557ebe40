#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domdraw/dag.hpp"

namespace domdraw {

// Streams the topological orders of a dag in lexicographic order of the
// vertex sequence (ties between available vertices broken by ascending id).
class LinearExtensionStream {
public:
    explicit LinearExtensionStream(const Dag& g);

    // Next order, or nullopt once exhausted.  Amortised O(n) per order for
    // narrow posets, O(n^2) worst case per step.
    std::optional<std::vector<int>> next();

private:
    bool descend();
    bool retreat();
    void place(int v);
    void unplace(int v);

    const Dag* g_;
    std::vector<int> indeg_;
    std::vector<int> avail_;  // sorted ascending
    std::vector<int> order_;
    bool started_ = false;
    bool done_ = false;
};

// The topological orders of g, one stream.
inline LinearExtensionStream topological_orders(const Dag& g) {
    return LinearExtensionStream(g);
}

template <typename Fn>
bool for_each_linear_extension(const Dag& g, Fn&& fn) {
    LinearExtensionStream stream(g);
    while (auto order = stream.next())
        if (!fn(*order)) return false;
    return true;
}

// All extensions in lexicographic order.  Throws bound_error when the count
// exceeds cap, so callers never blow memory on wide posets.
std::vector<std::vector<int>> all_linear_extensions(const Dag& g, std::size_t cap);

// min(true count, cap + 1); a return of cap + 1 means "more than cap".
std::uint64_t count_linear_extensions(const Dag& g, std::uint64_t cap);

}  // namespace domdraw
