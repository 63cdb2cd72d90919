#include "polyprod/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "polyprod/union_find.hpp"

namespace polyprod {

bool SimplicialComplex::contains(Mask f) const {
    return std::binary_search(faces.begin(), faces.end(), f);
}

Mask SimplicialComplex::vertex_mask() const {
    Mask out = 0;
    for (int v = 1; v <= m; ++v)
        if (contains(mask_bit(v))) out |= mask_bit(v);
    return out;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (Mask f : faces) d = std::max(d, popcount(f) - 1);
    return d;
}

namespace {

void check_ground_set(int m, int max_vertices) {
    if (m <= 0) throw std::invalid_argument("ground set size must be positive, got " + std::to_string(m));
    int cap = std::min(max_vertices, kVertexCap);
    if (m > cap)
        throw std::invalid_argument("ground set size " + std::to_string(m) + " exceeds the vertex guard (" +
                                    std::to_string(cap) + ")");
}

}  // namespace

SimplicialComplex from_facet_masks(int m, const std::vector<Mask>& facet_masks, int max_vertices) {
    check_ground_set(m, max_vertices);
    for (Mask f : facet_masks)
        if (f & ~full_mask(m))
            throw std::invalid_argument("facet " + format_mask(f) + " has a vertex outside [" +
                                        std::to_string(m) + "]");

    std::vector<bool> present(std::size_t{1} << m, false);
    present[0] = true;
    for (Mask f : facet_masks) {
        // enumerate subsets of f
        Mask s = f;
        while (true) {
            present[s] = true;
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    SimplicialComplex K;
    K.m = m;
    for (Mask s = 0; s < (Mask{1} << m); ++s)
        if (present[s]) K.faces.push_back(s);
    return K;
}

SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets, int max_vertices) {
    check_ground_set(m, max_vertices);
    std::vector<Mask> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        for (int v : f)
            if (v < 1 || v > m)
                throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(m));
        masks.push_back(mask_of(f));
    }
    return from_facet_masks(m, masks, max_vertices);
}

void validate(const SimplicialComplex& K) {
    // m == 0 is legitimate for derived complexes such as K_∅
    if (K.m < 0 || K.m > kVertexCap) throw std::logic_error("invalid ground set size");
    if (K.faces.empty() || K.faces.front() != 0) throw std::logic_error("empty set missing from face list");
    for (std::size_t i = 0; i < K.faces.size(); ++i) {
        Mask f = K.faces[i];
        if (i > 0 && K.faces[i - 1] >= f) throw std::logic_error("face list not strictly increasing");
        if (f & ~full_mask(K.m)) throw std::logic_error("face " + format_mask(f) + " outside ground set");
        for (Mask t = f; t; t &= t - 1)
            if (!K.contains(f & ~(t & -t)))
                throw std::logic_error("not downward closed at face " + format_mask(f));
    }
}

std::vector<Mask> facets(const SimplicialComplex& K) {
    std::vector<Mask> out;
    for (Mask f : K.faces) {
        bool maximal = true;
        // f is maximal iff no f ∪ {v} is a face
        for (int v = 1; v <= K.m && maximal; ++v)
            if (!mask_test(f, v) && K.contains(f | mask_bit(v))) maximal = false;
        if (maximal && f != 0) out.push_back(f);
    }
    if (out.empty() && !K.faces.empty()) out.push_back(0);  // K = {∅}
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

SimplicialComplex star(const SimplicialComplex& K, int v) {
    if (v < 1 || v > K.m) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    SimplicialComplex S;
    S.m = K.m;
    for (Mask f : K.faces)
        if (K.contains(f | mask_bit(v))) S.faces.push_back(f);
    if (S.faces.empty()) S.faces.push_back(0);  // ghost v: nothing contains it, star is {∅}
    return S;
}

namespace {

Subcomplex restricted(const SimplicialComplex& K, Mask keep, std::vector<Mask> kept_faces) {
    Subcomplex out;
    out.complex.m = popcount(keep);
    out.complex.faces = std::move(kept_faces);
    for (Mask& f : out.complex.faces) f = compress_mask(f, keep);
    out.old_label.reserve(static_cast<std::size_t>(out.complex.m));
    out.new_index.assign(static_cast<std::size_t>(K.m), 0);
    int next = 1;
    for (int v = 1; v <= K.m; ++v)
        if (mask_test(keep, v)) {
            out.old_label.push_back(v);
            out.new_index[v - 1] = next++;
        }
    return out;
}

}  // namespace

Subcomplex deletion(const SimplicialComplex& K, int v) {
    if (v < 1 || v > K.m) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    std::vector<Mask> kept;
    for (Mask f : K.faces)
        if (!mask_test(f, v)) kept.push_back(f);
    return restricted(K, full_mask(K.m) & ~mask_bit(v), std::move(kept));
}

Subcomplex link(const SimplicialComplex& K, int v) {
    if (v < 1 || v > K.m) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    std::vector<Mask> kept;
    for (Mask f : K.faces)
        if (!mask_test(f, v) && K.contains(f | mask_bit(v))) kept.push_back(f);
    if (kept.empty()) kept.push_back(0);  // ghost v: the link is {∅}
    return restricted(K, full_mask(K.m) & ~mask_bit(v), std::move(kept));
}

Subcomplex full_subcomplex(const SimplicialComplex& K, Mask omega) {
    if (omega & ~full_mask(K.m)) throw std::invalid_argument("subset " + format_mask(omega) + " outside ground set");
    std::vector<Mask> kept;
    for (Mask f : K.faces)
        if ((f & ~omega) == 0) kept.push_back(f);
    return restricted(K, omega, std::move(kept));
}

std::vector<Mask> embed_faces(const Subcomplex& sub) {
    Mask keep = 0;
    for (int v : sub.old_label) keep |= mask_bit(v);
    std::vector<Mask> out = sub.complex.faces;
    for (Mask& f : out) f = expand_mask(f, keep);
    return out;
}

SimplicialComplex join(const SimplicialComplex& K1, const SimplicialComplex& K2) {
    if (K1.m + K2.m > kVertexCap)
        throw std::invalid_argument("join ground set exceeds the vertex cap (" + std::to_string(kVertexCap) + ")");
    SimplicialComplex J;
    J.m = K1.m + K2.m;
    J.faces.reserve(K1.faces.size() * K2.faces.size());
    for (Mask f2 : K2.faces)
        for (Mask f1 : K1.faces) J.faces.push_back(f1 | (f2 << K1.m));
    return J;
}

namespace {

// Indicator over all 2^m subsets, for O(1) membership in full scans.
std::vector<bool> face_indicator(const SimplicialComplex& K) {
    std::vector<bool> ind(std::size_t{1} << K.m, false);
    for (Mask f : K.faces) ind[f] = true;
    return ind;
}

// ω is a missing face iff ω ∉ K but every codimension-one subset is in K.
bool is_missing(const std::vector<bool>& ind, Mask w) {
    if (ind[w]) return false;
    for (Mask t = w; t; t &= t - 1)
        if (!ind[w & ~(t & -t)]) return false;
    return true;
}

}  // namespace

std::vector<Mask> missing_faces(const SimplicialComplex& K) {
    const auto ind = face_indicator(K);
    std::vector<Mask> out;
    for (Mask w = 1; w < (Mask{1} << K.m); ++w)
        if (is_missing(ind, w)) out.push_back(w);
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

bool is_flag(const SimplicialComplex& K) {
    const auto ind = face_indicator(K);
    for (Mask w = 1; w < (Mask{1} << K.m); ++w)
        if (popcount(w) >= 3 && is_missing(ind, w)) return false;
    return true;
}

std::optional<Mask> nonflag_witness(const SimplicialComplex& K) {
    const auto ind = face_indicator(K);
    std::optional<Mask> best;
    for (Mask w = 1; w < (Mask{1} << K.m); ++w)
        if (popcount(w) >= 3 && is_missing(ind, w))
            if (!best || size_lex_less(w, *best)) best = w;
    return best;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u < 1 || u > m || v < 1 || v > m) throw std::invalid_argument("edge endpoint out of range");
    adj[u - 1] |= mask_bit(v);
    adj[v - 1] |= mask_bit(u);
    vertices |= mask_bit(u) | mask_bit(v);
}

int Graph::edge_count() const {
    int twice = 0;
    for (Mask a : adj) twice += popcount(a);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= m; ++u)
        for (Mask t = adj[u - 1] & ~(full_mask(u)); t; t &= t - 1) out.emplace_back(u, std::countr_zero(t) + 1);
    return out;
}

Graph skeleton_graph(const SimplicialComplex& K) {
    Graph G;
    G.m = K.m;
    G.adj.assign(static_cast<std::size_t>(K.m), 0);
    G.vertices = K.vertex_mask();
    for (Mask f : K.faces)
        if (popcount(f) == 2) {
            auto vs = mask_vertices(f);
            G.adj[vs[0] - 1] |= mask_bit(vs[1]);
            G.adj[vs[1] - 1] |= mask_bit(vs[0]);
        }
    return G;
}

int component_count_induced(const Graph& G, Mask subset) {
    Mask verts = subset & G.vertices;
    if (!verts) return 0;
    UnionFind uf(G.m);
    for (Mask t = verts; t; t &= t - 1) {
        int u = std::countr_zero(t) + 1;
        for (Mask s = G.adj[u - 1] & verts; s; s &= s - 1) uf.unite(u - 1, std::countr_zero(s));
    }
    int count = 0;
    for (Mask t = verts; t; t &= t - 1) {
        int u = std::countr_zero(t);
        if (uf.find(u) == u) ++count;
    }
    return count;
}

int connected_component_count(const SimplicialComplex& K) {
    Graph G = skeleton_graph(K);
    return component_count_induced(G, G.vertices);
}

}  // namespace polyprod
