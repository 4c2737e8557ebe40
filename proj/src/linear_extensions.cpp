#include "domdraw/linear_extensions.hpp"

#include <algorithm>

#include "domdraw/errors.hpp"

namespace domdraw {

LinearExtensionStream::LinearExtensionStream(const Dag& g) : g_(&g) {
    indeg_.resize(g.n());
    for (int v = 0; v < g.n(); ++v) indeg_[v] = int(g.predecessors(v).size());
    for (int v = 0; v < g.n(); ++v)
        if (indeg_[v] == 0) avail_.push_back(v);
    order_.reserve(g.n());
}

void LinearExtensionStream::place(int v) {
    avail_.erase(std::lower_bound(avail_.begin(), avail_.end(), v));
    for (int w : g_->successors(v))
        if (--indeg_[w] == 0)
            avail_.insert(std::lower_bound(avail_.begin(), avail_.end(), w), w);
    order_.push_back(v);
}

void LinearExtensionStream::unplace(int v) {
    order_.pop_back();
    for (int w : g_->successors(v))
        if (indeg_[w]++ == 0)
            avail_.erase(std::lower_bound(avail_.begin(), avail_.end(), w));
    avail_.insert(std::lower_bound(avail_.begin(), avail_.end(), v), v);
}

bool LinearExtensionStream::descend() {
    while (int(order_.size()) < g_->n()) place(avail_.front());
    return true;
}

bool LinearExtensionStream::retreat() {
    while (!order_.empty()) {
        int v = order_.back();
        unplace(v);
        auto it = std::upper_bound(avail_.begin(), avail_.end(), v);
        if (it != avail_.end()) {
            place(*it);
            return true;
        }
    }
    return false;
}

std::optional<std::vector<int>> LinearExtensionStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        descend();
        return order_;
    }
    if (!retreat()) {
        done_ = true;
        return std::nullopt;
    }
    descend();
    return order_;
}

std::vector<std::vector<int>> all_linear_extensions(const Dag& g, std::size_t cap) {
    std::vector<std::vector<int>> out;
    LinearExtensionStream stream(g);
    while (auto order = stream.next()) {
        if (out.size() == cap)
            throw bound_error("linear extension count exceeds cap of " + std::to_string(cap));
        out.push_back(std::move(*order));
    }
    return out;
}

std::uint64_t count_linear_extensions(const Dag& g, std::uint64_t cap) {
    std::uint64_t count = 0;
    LinearExtensionStream stream(g);
    while (stream.next()) {
        if (++count > cap) return cap + 1;
    }
    return count;
}

}  // namespace domdraw
