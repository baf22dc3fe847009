#include "forcing/vertex_set.hpp"

#include <bit>
#include <stdexcept>

namespace forcing {

VertexSet::VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.add(v);
    return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
}

VertexSet VertexSet::from_indices(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
}

void VertexSet::clear() {
    for (auto& w : w_) w = 0;
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~other.w_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & other.w_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
    // keep unused high bits zero
    int spare = static_cast<int>(w_.size()) * 64 - n_;
    if (spare > 0 && !w_.empty()) s.w_.back() &= ~std::uint64_t{0} >> spare;
    return s;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<int>(i) * 64 + std::countr_zero(w_[i]);
    return -1;
}

int VertexSet::next(int v) const {
    int start = v + 1;
    if (start >= n_) return -1;
    std::size_t i = static_cast<std::size_t>(start >> 6);
    std::uint64_t w = w_[i] & (~std::uint64_t{0} << (start & 63));
    while (true) {
        if (w) return static_cast<int>(i) * 64 + std::countr_zero(w);
        if (++i >= w_.size()) return -1;
        w = w_[i];
    }
}

std::vector<int> VertexSet::to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
}

std::size_t VertexSet::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n_);
    for (auto w : w_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

} // namespace forcing
