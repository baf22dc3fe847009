// vertex_set.hpp
// Fixed-universe bit set over vertices 0..n-1. Carrier for every vertex
// subset in the library (initial colored sets, closures, units, layers).
#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace forcing {

class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);

    static VertexSet full(int universe);
    static VertexSet of(int universe, std::initializer_list<int> members);
    static VertexSet from_indices(int universe, const std::vector<int>& members);

    int universe_size() const { return n_; }
    bool contains(int v) const { return (w_[word(v)] >> bit(v)) & 1u; }
    void add(int v) { w_[word(v)] |= mask(v); }
    void remove(int v) { w_[word(v)] &= ~mask(v); }
    void clear();

    int count() const;
    bool empty() const;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    VertexSet complement() const;

    // Lowest member, or -1 when empty.
    int first() const;
    // Next member strictly greater than `v`, or -1.
    int next(int v) const;

    std::vector<int> to_indices() const;

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    std::size_t hash() const;

    // Raw 64-bit words, unused high bits always zero.
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    static int word(int v) { return v >> 6; }
    static int bit(int v) { return v & 63; }
    static std::uint64_t mask(int v) { return std::uint64_t{1} << bit(v); }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace forcing
