#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace eclab {

// Packed boolean set over a fixed universe 0..n-1. Binary operations
// require both operands to share the universe size (asserted in debug
// builds); sets are never silently resized.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), words_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= (std::uint64_t{1} << (v & 63));
    }

    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    // Lowest set bit, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    // Lowest set bit strictly above v, or -1.
    int next(int v) const {
        int start = v + 1;
        if (start >= n_) return -1;
        std::size_t wi = std::size_t(start) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (w) return int(wi * 64) + std::countr_zero(w);
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator^=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    // Set difference: this \ o.
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    // Complement within the universe.
    VertexSet operator~() const {
        VertexSet r(*this);
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Orders sets by their packed integer value (bit v weighs 2^v).
    bool operator<(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        return false;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ std::uint64_t(n_);
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return std::size_t(h);
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int v = first(); v >= 0; v = next(v)) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        }
        return s + "}";
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

private:
    void trim() {
        if (n_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
        if (n_ == 0 && !words_.empty()) words_.back() = 0;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace eclab
