#ifndef CIRC_BITS_HPP
#define CIRC_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace circ {

/// A set of vertices drawn from {0,...,63}, bit i set iff vertex i is present.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr int popcount(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

/// Mask with the low n bits set (n in [0, 64]).
constexpr VertexSet low_mask(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

inline std::vector<int> to_vertices(VertexSet s) {
    std::vector<int> out;
    out.reserve(popcount(s));
    while (s) {
        out.push_back(lowest(s));
        s &= s - 1;
    }
    return out;
}

inline VertexSet from_vertices(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= bit(v);
    return s;
}

/// Calls fn(sub) for every subset of `s`, including the empty set and `s` itself.
template <typename Fn>
void for_each_subset(VertexSet s, Fn&& fn) {
    VertexSet sub = s;
    while (true) {
        fn(sub);
        if (sub == 0) break;
        sub = (sub - 1) & s;
    }
}

}  // namespace circ

#endif  // CIRC_BITS_HPP
