// Test-side oracles and generators. Everything here recomputes results by
// direct definition-level enumeration, independent of the library's
// optimized paths, so the two can be compared.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polyprod/complex.hpp"

namespace polyprod::testing {

using Rng = std::mt19937_64;

// ---- independent recomputations ----------------------------------------

// Downward closure via plain sets.
inline std::set<Mask> closure_bruteforce(int m, const std::vector<Mask>& facet_masks) {
    std::set<Mask> faces{0};
    for (Mask f : facet_masks)
        for (Mask s = 0; s < (Mask{1} << m); ++s)
            if ((s & ~f) == 0) faces.insert(s);
    return faces;
}

// Missing faces straight from the definition.
inline std::set<Mask> missing_faces_bruteforce(const SimplicialComplex& K) {
    std::set<Mask> faces(K.faces.begin(), K.faces.end());
    std::set<Mask> out;
    for (Mask w = 1; w < (Mask{1} << K.m); ++w) {
        if (faces.count(w)) continue;
        bool boundary_in = true;
        for (Mask s = (w - 1) & w; boundary_in; s = (s - 1) & w) {
            if (s != w && !faces.count(s)) boundary_in = false;
            if (s == 0) break;
        }
        if (boundary_in) out.insert(w);
    }
    return out;
}

// An induced cycle is an induced connected 2-regular subgraph.
inline bool has_chordless_cycle_bruteforce(const Graph& G) {
    for (Mask s = 0; s < (Mask{1} << G.m); ++s) {
        if ((s & ~G.vertices) || popcount(s) < 4) continue;
        bool two_regular = true;
        for (Mask t = s; t && two_regular; t &= t - 1)
            if (popcount(G.adj[std::countr_zero(t)] & s) != 2) two_regular = false;
        if (two_regular && component_count_induced(G, s) == 1) return true;
    }
    return false;
}

inline bool is_chordal_bruteforce(const Graph& G) { return !has_chordless_cycle_bruteforce(G); }

// Lyndon = strictly smallest among its rotations.
inline bool is_lyndon_bruteforce(const std::vector<int>& w) {
    const std::size_t n = w.size();
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<int> rot;
        for (std::size_t i = 0; i < n; ++i) rot.push_back(w[(i + r) % n]);
        if (!(w < rot)) return false;
    }
    return n >= 1;
}

inline std::vector<std::vector<int>> lyndon_bruteforce(int m, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> w;
    auto rec = [&](auto&& self) -> void {
        if (!w.empty() && is_lyndon_bruteforce(w)) out.push_back(w);
        if (static_cast<int>(w.size()) == max_len) return;
        for (int c = 1; c <= m; ++c) {
            w.push_back(c);
            self(self);
            w.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

// Rank over F_p by plain Gaussian elimination. Agrees with the rational
// rank whenever p exceeds every minor of the matrix.
inline int rank_modp(std::vector<std::vector<long long>> a, long long p) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (auto& row : a)
        for (auto& x : row) x = ((x % p) + p) % p;
    auto inv = [&](long long x) {
        long long r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = (__int128)r * x % p;
            x = (__int128)x * x % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        long long iv = inv(a[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            long long f = (__int128)a[i][c] * iv % p;
            for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - (__int128)f * a[r][j]) % p + p) % p;
        }
        ++r;
    }
    return static_cast<int>(r);
}

// ---- builders ------------------------------------------------------------

inline SimplicialComplex points(int m) {
    std::vector<std::vector<int>> fs;
    for (int v = 1; v <= m; ++v) fs.push_back({v});
    return from_facets(m, fs);
}

inline SimplicialComplex path_complex(int m) {
    std::vector<std::vector<int>> fs;
    if (m == 1) fs.push_back({1});
    for (int v = 1; v < m; ++v) fs.push_back({v, v + 1});
    return from_facets(m, fs);
}

inline SimplicialComplex cycle_complex(int m) {
    std::vector<std::vector<int>> fs;
    for (int v = 1; v < m; ++v) fs.push_back({v, v + 1});
    fs.push_back({m, 1});
    return from_facets(m, fs);
}

inline SimplicialComplex simplex(int m) {
    std::vector<int> all;
    for (int v = 1; v <= m; ++v) all.push_back(v);
    return from_facets(m, {all});
}

inline SimplicialComplex boundary_simplex(int m) {  // ∂Δ^{m-1}
    std::vector<std::vector<int>> fs;
    for (int drop = 1; drop <= m; ++drop) {
        std::vector<int> f;
        for (int v = 1; v <= m; ++v)
            if (v != drop) f.push_back(v);
        fs.push_back(f);
    }
    return from_facets(m, fs);
}

inline SimplicialComplex octahedron() {
    std::vector<std::vector<int>> fs;
    for (int a : {1, 2})
        for (int b : {3, 4})
            for (int c : {5, 6}) fs.push_back({a, b, c});
    return from_facets(6, fs);
}

inline Graph graph_from_edges(int m, const std::vector<std::pair<int, int>>& edges, bool all_vertices = true) {
    Graph G;
    G.m = m;
    G.adj.assign(static_cast<std::size_t>(m), 0);
    if (all_vertices) G.vertices = full_mask(m);
    for (auto [u, v] : edges) G.add_edge(u, v);
    return G;
}

// Clique complex of a graph, by definition (every subset whose singletons
// are vertices and whose pairs are edges).
inline SimplicialComplex clique_complex_bruteforce(const Graph& G) {
    SimplicialComplex K;
    K.m = G.m;
    for (Mask s = 0; s < (Mask{1} << G.m); ++s) {
        if (s & ~G.vertices) continue;
        bool clique = true;
        for (Mask t = s; t && clique; t &= t - 1) {
            int v = std::countr_zero(t) + 1;
            Mask rest = s & ~mask_bit(v);
            if ((G.adj[v - 1] & rest) != rest) clique = false;
        }
        if (clique) K.faces.push_back(s);
    }
    return K;
}

// Relabels a complex along a permutation old→new of [m].
inline SimplicialComplex relabel(const SimplicialComplex& K, const std::vector<int>& perm) {
    SimplicialComplex out;
    out.m = K.m;
    for (Mask f : K.faces) {
        Mask g = 0;
        for (int v : mask_vertices(f)) g |= mask_bit(perm[static_cast<std::size_t>(v - 1)]);
        out.faces.push_back(g);
    }
    std::sort(out.faces.begin(), out.faces.end());
    return out;
}

// ---- random and exhaustive generators -------------------------------------

inline Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    Graph G;
    G.m = n;
    G.adj.assign(static_cast<std::size_t>(n), 0);
    G.vertices = full_mask(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) G.add_edge(u, v);
    return G;
}

// Connected chordal graph: vertex k attaches to a nonempty clique of the
// part built so far, so 1..n is a perfect elimination ordering by
// construction.
inline Graph random_chordal_connected(int n, Rng& rng) {
    Graph G;
    G.m = n;
    G.adj.assign(static_cast<std::size_t>(n), 0);
    G.vertices = full_mask(n);
    for (int k = 2; k <= n; ++k) {
        std::vector<int> perm(static_cast<std::size_t>(k - 1));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        int target = std::uniform_int_distribution<int>(1, k - 1)(rng);
        Mask clique = 0;
        for (int w : perm) {
            if (popcount(clique) >= target) break;
            if ((G.adj[static_cast<std::size_t>(w - 1)] & clique) == clique) clique |= mask_bit(w);
        }
        for (int w : mask_vertices(clique)) G.add_edge(k, w);
    }
    return G;
}

inline SimplicialComplex random_complex(int m, Rng& rng) {
    std::uniform_int_distribution<int> count(0, 2 * m);
    std::bernoulli_distribution member(0.4);
    std::vector<Mask> fs;
    int facet_count = count(rng);
    for (int i = 0; i < facet_count; ++i) {
        Mask f = 0;
        for (int v = 1; v <= m; ++v)
            if (member(rng)) f |= mask_bit(v);
        fs.push_back(f);
    }
    return from_facet_masks(m, fs);
}

inline SimplicialComplex random_flag_complex(int m, Rng& rng) {
    std::uniform_real_distribution<double> pd(0.2, 0.8);
    return clique_complex_bruteforce(random_graph(m, pd(rng), rng));
}

// Every downward-closed family on [m] (containing ∅), by deciding subset
// membership in (cardinality, value) order; inclusion is legal only when
// all codimension-one subsets are already in.
template <typename Fn>
void enumerate_all_complexes(int m, Fn&& fn) {
    std::vector<Mask> order;
    for (Mask s = 1; s < (Mask{1} << m); ++s) order.push_back(s);
    std::sort(order.begin(), order.end(), size_lex_less);

    std::vector<char> chosen(std::size_t{1} << m, 0);
    chosen[0] = 1;
    std::vector<Mask> current{0};
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
            SimplicialComplex K;
            K.m = m;
            K.faces = current;
            std::sort(K.faces.begin(), K.faces.end());
            fn(K);
            return;
        }
        Mask s = order[idx];
        self(self, idx + 1);  // exclude s
        bool closed = true;
        for (Mask t = s; t && closed; t &= t - 1)
            if (!chosen[s & ~(t & -t)]) closed = false;
        if (closed) {
            chosen[s] = 1;
            current.push_back(s);
            self(self, idx + 1);
            current.pop_back();
            chosen[s] = 0;
        }
    };
    rec(rec, 0);
}

// Every flag complex on [m]: a vertex subset plus a graph on it.
template <typename Fn>
void enumerate_all_flag_complexes(int m, Fn&& fn) {
    for (Mask verts = 0; verts < (Mask{1} << m); ++verts) {
        auto vs = mask_vertices(verts);
        int k = static_cast<int>(vs.size());
        int pairs = k * (k - 1) / 2;
        for (Mask edges = 0; edges < (Mask{1} << pairs); ++edges) {
            Graph G;
            G.m = m;
            G.adj.assign(static_cast<std::size_t>(m), 0);
            G.vertices = verts;
            int bit = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j, ++bit)
                    if (edges & (Mask{1} << bit)) G.add_edge(vs[static_cast<std::size_t>(i)],
                                                             vs[static_cast<std::size_t>(j)]);
            fn(clique_complex_bruteforce(G));
        }
    }
}

// All labeled trees on n vertices from Prüfer sequences.
template <typename Fn>
void enumerate_all_trees(int n, Fn&& fn) {
    if (n == 1) {
        fn(graph_from_edges(1, {}));
        return;
    }
    if (n == 2) {
        fn(graph_from_edges(2, {{1, 2}}));
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 1);
    while (true) {
        std::vector<int> degree(static_cast<std::size_t>(n + 1), 1);
        for (int x : seq) ++degree[static_cast<std::size_t>(x)];
        std::vector<std::pair<int, int>> edges;
        std::vector<int> work = seq;
        Mask leaves = 0;
        for (int v = 1; v <= n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1) leaves |= mask_bit(v);
        for (int x : work) {
            int leaf = lowest_vertex(leaves);
            edges.emplace_back(leaf, x);
            leaves &= ~mask_bit(leaf);
            if (--degree[static_cast<std::size_t>(x)] == 1) leaves |= mask_bit(x);
        }
        auto last = mask_vertices(leaves);
        edges.emplace_back(last[0], last[1]);
        fn(graph_from_edges(n, edges));

        int i = n - 3;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == n) --i;
        if (i < 0) break;
        ++seq[static_cast<std::size_t>(i)];
        for (int j = i + 1; j <= n - 3; ++j) seq[static_cast<std::size_t>(j)] = 1;
    }
}

}  // namespace polyprod::testing
