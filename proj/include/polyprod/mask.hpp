// Vertex-subset bit masks. Vertices are 1-based (1..m); vertex v occupies
// bit v-1, so the mask 0 is the empty set.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace polyprod {

using Mask = std::uint32_t;

// Global enumeration guard. Algorithms here scan all 2^m subsets, so the
// ground set size is capped: kDefaultMaxVertices for constructors unless
// overridden, kVertexCap unconditionally (mask width and memory).
inline constexpr int kDefaultMaxVertices = 24;
inline constexpr int kVertexCap = 26;

inline int popcount(Mask s) { return std::popcount(s); }

inline Mask full_mask(int m) { return (Mask{1} << m) - 1; }

inline bool mask_test(Mask s, int v) { return (s >> (v - 1)) & 1u; }

inline Mask mask_bit(int v) { return Mask{1} << (v - 1); }

// Lowest vertex (1-based) of a nonempty mask.
inline int lowest_vertex(Mask s) { return std::countr_zero(s) + 1; }

// Orders masks as ascending vertex sequences: {1,4} before {2,3}. This is
// the lexicographic order used for all canonical outputs (note it differs
// from numeric mask order).
inline bool lex_less(Mask a, Mask b) {
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

// (cardinality, lex) order — the canonical order for face lists.
inline bool size_lex_less(Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return lex_less(a, b);
}

inline std::vector<int> mask_vertices(Mask s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(s)));
    for (Mask t = s; t; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
    return out;
}

template <typename It>
Mask mask_of(It first, It last) {
    Mask s = 0;
    for (; first != last; ++first) s |= mask_bit(*first);
    return s;
}

inline Mask mask_of(const std::vector<int>& vs) { return mask_of(vs.begin(), vs.end()); }

inline Mask mask_of(std::initializer_list<int> vs) { return mask_of(vs.begin(), vs.end()); }

inline std::string format_mask(Mask s) {
    std::string out = "{";
    bool first = true;
    for (int v : mask_vertices(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

// Drops the positions not in `keep` and packs the remaining bits downward,
// preserving relative vertex order. Requires s ⊆ keep.
inline Mask compress_mask(Mask s, Mask keep) {
    Mask out = 0;
    int pos = 0;
    for (Mask t = keep; t; t &= t - 1) {
        if (s & (t & -t)) out |= Mask{1} << pos;
        ++pos;
    }
    return out;
}

// Inverse of compress_mask: spreads the low bits of s onto the positions
// of `keep`.
inline Mask expand_mask(Mask s, Mask keep) {
    Mask out = 0;
    int pos = 0;
    for (Mask t = keep; t; t &= t - 1) {
        if (s & (Mask{1} << pos)) out |= t & -t;
        ++pos;
    }
    return out;
}

}  // namespace polyprod
