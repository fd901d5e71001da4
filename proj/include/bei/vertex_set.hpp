#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bei {

// Set of positive integers (vertex labels or variable indices), stored as a
// dynamic bitset. Word 0 holds elements 1..64, word 1 holds 65..128, etc.
class VertexSet {
public:
    VertexSet() = default;

    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static VertexSet full(int n) {
        VertexSet s;
        for (int v = 1; v <= n; ++v) s.insert(v);
        return s;
    }

    bool contains(int v) const {
        if (v < 1) return false;
        std::size_t w = static_cast<std::size_t>(v - 1) >> 6;
        if (w >= words_.size()) return false;
        return (words_[w] >> ((v - 1) & 63)) & 1u;
    }

    void insert(int v) {
        std::size_t w = static_cast<std::size_t>(v - 1) >> 6;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= uint64_t(1) << ((v - 1) & 63);
    }

    void erase(int v) {
        std::size_t w = static_cast<std::size_t>(v - 1) >> 6;
        if (w < words_.size()) words_[w] &= ~(uint64_t(1) << ((v - 1) & 63));
        trim();
    }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const { return words_.empty(); }

    // Smallest element, or 0 if empty.
    int min() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]) + 1);
        return 0;
    }

    int max() const {
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(words_[i]) + 1);
        return 0;
    }

    // Smallest element strictly greater than v, or 0 if none. Element e sits
    // at bit position e-1, so we scan for the first set bit at position >= v.
    int next(int v) const {
        if (v < 0) v = 0;
        std::size_t w = static_cast<std::size_t>(v) >> 6;
        if (w >= words_.size()) return 0;
        int low = v & 63;
        uint64_t cur = words_[w] & (low == 0 ? ~uint64_t(0) : ~((uint64_t(1) << low) - 1));
        while (true) {
            if (cur) return static_cast<int>(w * 64 + std::countr_zero(cur) + 1);
            if (++w >= words_.size()) return 0;
            cur = words_[w];
        }
    }

    VertexSet& operator|=(const VertexSet& o) {
        if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
        trim();
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        trim();
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { a -= b; return a; }

    bool operator==(const VertexSet& o) const {
        std::size_t m = std::max(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < m; ++i) {
            uint64_t a = i < words_.size() ? words_[i] : 0;
            uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
            if (a != b) return false;
        }
        return true;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
            if (words_[i] & ~b) return false;
        }
        return true;
    }

    bool intersects(const VertexSet& o) const {
        std::size_t m = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < m; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v = min(); v != 0; v = next(v)) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v = min(); v != 0; v = next(v)) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    void trim() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    std::vector<uint64_t> words_;
};

// Order by cardinality, then by element list lexicographically. Used whenever
// a deterministic ordering of vertex sets is required.
inline bool set_order_less(const VertexSet& a, const VertexSet& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    int x = a.min(), y = b.min();
    while (x != 0 && y != 0) {
        if (x != y) return x < y;
        x = a.next(x);
        y = b.next(y);
    }
    return x == 0 && y != 0;
}

struct SetOrderLess {
    bool operator()(const VertexSet& a, const VertexSet& b) const { return set_order_less(a, b); }
};

}  // namespace bei
