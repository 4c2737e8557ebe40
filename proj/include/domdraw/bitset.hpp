#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace domdraw {

// Fixed-size dynamic bitset over 64-bit words.  Rows of the transitive
// closure and member masks in the decomposition are stored as these.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // this := this & ~o
    DynBitset& and_not(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const DynBitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const DynBitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // First set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        std::size_t k = from >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) {
                int i = int(k * 64) + std::countr_zero(w);
                return i < nbits_ ? i : -1;
            }
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) fn(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const DynBitset& a, const DynBitset& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

inline DynBitset bitset_of(int nbits, const std::vector<int>& members) {
    DynBitset s(nbits);
    for (int v : members) s.set(v);
    return s;
}

}  // namespace domdraw
