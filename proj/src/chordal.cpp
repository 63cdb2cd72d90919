#include "polyprod/chordal.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyprod {

std::vector<int> lex_bfs(const Graph& G) {
    const int n = G.vertex_count();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    // label[v] = ascending visit times of v's visited neighbours; the label
    // with the earliest times wins, longer label wins on a shared prefix.
    std::vector<std::vector<int>> label(static_cast<std::size_t>(G.m));
    Mask unvisited = G.vertices;

    auto label_less = [&](int a, int b) {  // true when a's label < b's
        const auto &la = label[a - 1], &lb = label[b - 1];
        std::size_t k = std::min(la.size(), lb.size());
        for (std::size_t i = 0; i < k; ++i)
            if (la[i] != lb[i]) return la[i] > lb[i];
        return la.size() < lb.size();
    };

    for (int t = 0; t < n; ++t) {
        int best = 0;
        for (Mask s = unvisited; s; s &= s - 1) {
            int v = std::countr_zero(s) + 1;
            if (best == 0 || label_less(best, v)) best = v;
        }
        order.push_back(best);
        unvisited &= ~mask_bit(best);
        for (Mask s = G.adj[best - 1] & unvisited; s; s &= s - 1) label[std::countr_zero(s)].push_back(t);
    }
    return order;
}

std::optional<PeoViolation> find_peo_violation(const Graph& G, const std::vector<int>& order) {
    Mask seen = 0;
    Mask all = 0;
    for (int v : order) {
        if (v < 1 || v > G.m || !mask_test(G.vertices, v) || mask_test(all, v))
            throw std::invalid_argument("order is not a permutation of the vertex list");
        all |= mask_bit(v);
    }
    if (all != G.vertices) throw std::invalid_argument("order is not a permutation of the vertex list");

    for (int v : order) {
        Mask earlier = G.adj[v - 1] & seen;
        for (Mask s = earlier; s; s &= s - 1) {
            int u = std::countr_zero(s) + 1;
            Mask rest = s & (s - 1);
            if ((G.adj[u - 1] & rest) != rest) {
                for (Mask r = rest; r; r &= r - 1) {
                    int w = std::countr_zero(r) + 1;
                    if (!G.has_edge(u, w)) return PeoViolation{v, u, w};
                }
            }
        }
        seen |= mask_bit(v);
    }
    return std::nullopt;
}

bool verify_peo(const Graph& G, const std::vector<int>& order) {
    return !find_peo_violation(G, order).has_value();
}

bool check_cycle_certificate(const Graph& G, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 4) return false;
    Mask seen = 0;
    for (int v : cycle) {
        if (v < 1 || v > G.m || mask_test(seen, v)) return false;
        seen |= mask_bit(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (G.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

namespace {

// Shortest u→w path avoiding `forbidden`; lowest-index BFS for determinism.
std::optional<std::vector<int>> bfs_path(const Graph& G, int u, int w, Mask forbidden) {
    Mask allowed = G.vertices & ~forbidden;
    if (!mask_test(allowed, u) || !mask_test(allowed, w)) return std::nullopt;
    std::vector<int> parent(static_cast<std::size_t>(G.m), 0);
    Mask reached = mask_bit(u);
    std::vector<int> frontier{u};
    while (!frontier.empty() && !mask_test(reached, w)) {
        std::vector<int> next;
        for (int x : frontier)
            for (Mask s = G.adj[x - 1] & allowed & ~reached; s; s &= s - 1) {
                int y = std::countr_zero(s) + 1;
                reached |= mask_bit(y);
                parent[y - 1] = x;
                next.push_back(y);
            }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    if (!mask_test(reached, w)) return std::nullopt;
    std::vector<int> path{w};
    while (path.back() != u) path.push_back(parent[path.back() - 1]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> canonical_rotation(std::vector<int> cycle) {
    auto lowest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), lowest, cycle.end());
    if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

// A cycle through v, u, w: shortest u→w path in the graph with v's other
// neighbours removed. The path is induced (it is shortest in an induced
// subgraph), u,w are non-adjacent, and no interior vertex sees v.
std::optional<std::vector<int>> cycle_through(const Graph& G, int v, int u, int w) {
    Mask forbidden = (G.adj[v - 1] | mask_bit(v)) & ~(mask_bit(u) | mask_bit(w));
    auto path = bfs_path(G, u, w, forbidden);
    if (!path) return std::nullopt;
    path->insert(path->begin(), v);
    return canonical_rotation(std::move(*path));
}

}  // namespace

ChordalityCertificate is_chordal(const Graph& G) {
    std::vector<int> order = lex_bfs(G);
    auto violation = find_peo_violation(G, order);
    if (!violation) return EliminationOrdering{std::move(order)};

    if (auto cyc = cycle_through(G, violation->vertex, violation->u, violation->w))
        return ChordlessCycleCertificate{std::move(*cyc)};

    // The failed triple gives no cycle only in degenerate cases; scan all
    // (centre, two non-adjacent neighbours) triples. A hole exists, so some
    // triple on it yields one.
    for (Mask cs = G.vertices; cs; cs &= cs - 1) {
        int c = std::countr_zero(cs) + 1;
        auto nbrs = mask_vertices(G.adj[c - 1]);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (G.has_edge(nbrs[i], nbrs[j])) continue;
                if (auto cyc = cycle_through(G, c, nbrs[i], nbrs[j]))
                    return ChordlessCycleCertificate{std::move(*cyc)};
            }
    }
    throw std::logic_error("perfect elimination ordering failed but no chordless cycle found");
}

}  // namespace polyprod
