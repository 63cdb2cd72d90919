// Abstract simplicial complexes on the ground set [m] = {1,...,m}, stored
// as the sorted list of all face masks. The empty set is always a face. A
// ground-set element whose singleton is not a face is a ghost vertex; the
// ground set size is therefore tracked independently of the vertex set.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyprod/mask.hpp"

namespace polyprod {

struct SimplicialComplex {
    int m = 0;                // ground set size
    std::vector<Mask> faces;  // strictly increasing (numeric), contains 0, downward closed

    bool contains(Mask f) const;
    std::size_t face_count() const { return faces.size(); }
    Mask vertex_mask() const;
    int vertex_count() const { return popcount(vertex_mask()); }
    Mask ghost_mask() const { return full_mask(m) & ~vertex_mask(); }
    // Dimension of the complex; {∅} has dimension -1.
    int dim() const;

    bool operator==(const SimplicialComplex&) const = default;
};

// Downward closure of a facet list. Ground-set elements in no facet become
// ghost vertices. Throws std::invalid_argument on m <= 0, m beyond the
// guard, or out-of-range vertices.
SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets,
                              int max_vertices = kDefaultMaxVertices);
SimplicialComplex from_facet_masks(int m, const std::vector<Mask>& facets,
                                   int max_vertices = kDefaultMaxVertices);

// Throws std::logic_error if the face list is unsorted, misses the empty
// set, or is not downward closed.
void validate(const SimplicialComplex& K);

// Maximal faces in (size, lex) order.
std::vector<Mask> facets(const SimplicialComplex& K);

// A complex derived from a larger one, carrying the ground-set re-indexing
// in both directions. new_index is the old→new map (0 = dropped).
struct Subcomplex {
    SimplicialComplex complex;
    std::vector<int> old_label;  // old_label[i-1] = original name of vertex i
    std::vector<int> new_index;  // new_index[j-1] = new name of original j, or 0

    bool operator==(const Subcomplex&) const = default;
};

// star_K(v) = {τ ∈ K | {v} ∪ τ ∈ K}, on the same ground set [m].
SimplicialComplex star(const SimplicialComplex& K, int v);

// K \ v = {τ ∈ K | v ∉ τ} and link_K(v) = star_K(v) ∩ K\v, both on the
// ground set [m] \ {v} (order-preserving re-index).
Subcomplex deletion(const SimplicialComplex& K, int v);
Subcomplex link(const SimplicialComplex& K, int v);

// K_ω = {σ ∈ K | σ ⊆ ω}, on the ground set ω.
Subcomplex full_subcomplex(const SimplicialComplex& K, Mask omega);

// Faces of a Subcomplex re-embedded into the original ground set.
std::vector<Mask> embed_faces(const Subcomplex& sub);

// K₁ ∗ K₂ = {σ₁ ∪ σ₂}; K₂'s ground set is re-indexed after K₁'s.
SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2);

// All inclusion-minimal non-faces, in (size, lex) order. Ghost vertices are
// the missing faces of size one.
std::vector<Mask> missing_faces(const SimplicialComplex& K);

// A complex is flag when every missing face has at most two elements.
bool is_flag(const SimplicialComplex& K);

// Smallest ((size, lex)) missing face with >= 3 elements, or nullopt when
// the complex is flag.
std::optional<Mask> nonflag_witness(const SimplicialComplex& K);

struct Graph {
    int m = 0;
    Mask vertices = 0;       // elements of [m] that are vertices
    std::vector<Mask> adj;   // size m; adj[v-1] = neighbours of v

    bool has_edge(int u, int v) const { return mask_test(adj[u - 1], v); }
    void add_edge(int u, int v);
    int vertex_count() const { return popcount(vertices); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

    bool operator==(const Graph&) const = default;
};

// The 1-skeleton: vertices and edges of K.
Graph skeleton_graph(const SimplicialComplex& K);

// Connected components of the 1-skeleton among actual vertices (ghosts do
// not count); {∅} has zero components.
int connected_component_count(const SimplicialComplex& K);

// Components of the subgraph induced on `subset` (restricted to actual
// vertices of G).
int component_count_induced(const Graph& G, Mask subset);

}  // namespace polyprod
