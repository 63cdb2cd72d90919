// Chordal graph recognition with certificates. A graph is chordal iff its
// vertices admit a perfect elimination ordering (each vertex's earlier
// neighbours pairwise adjacent); otherwise it has a chordless induced cycle
// with at least four vertices. is_chordal always returns one of the two
// certificates.

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "polyprod/complex.hpp"

namespace polyprod {

struct EliminationOrdering {
    std::vector<int> order;  // position = elimination rank, earlier first

    bool operator==(const EliminationOrdering&) const = default;
};

struct ChordlessCycleCertificate {
    // Cyclic sequence of >= 4 distinct vertices; consecutive pairs are
    // edges, non-consecutive pairs are non-edges. Canonical rotation:
    // starts at the smallest vertex, second entry is its smaller
    // cycle-neighbour.
    std::vector<int> cycle;

    bool operator==(const ChordlessCycleCertificate&) const = default;
};

using ChordalityCertificate = std::variant<EliminationOrdering, ChordlessCycleCertificate>;

inline bool is_peo_certificate(const ChordalityCertificate& c) {
    return std::holds_alternative<EliminationOrdering>(c);
}

// Lexicographic breadth-first search over the actual vertices, ties broken
// toward the lowest index. On a chordal graph the visit order satisfies the
// lesser-neighbour clique condition.
std::vector<int> lex_bfs(const Graph& G);

// Fulkerson–Gross condition at every vertex. Throws std::invalid_argument
// if `order` is not a permutation of the vertices of G.
bool verify_peo(const Graph& G, const std::vector<int>& order);

struct PeoViolation {
    int vertex;        // vertex whose earlier neighbourhood is not a clique
    int u, w;          // two earlier neighbours with no edge between them
};
std::optional<PeoViolation> find_peo_violation(const Graph& G, const std::vector<int>& order);

ChordalityCertificate is_chordal(const Graph& G);

// Structural check of a cycle certificate against G.
bool check_cycle_certificate(const Graph& G, const std::vector<int>& cycle);

}  // namespace polyprod
