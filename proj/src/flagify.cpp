#include "polyprod/flagify.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyprod {

FlagificationResult flagify(const SimplicialComplex& K) {
    const Graph G = skeleton_graph(K);
    const std::size_t n = std::size_t{1} << K.m;

    // clique[s]: s spans a clique of the 1-skeleton (ghosts span nothing).
    // Recurrence on the lowest vertex keeps the scan linear in 2^m.
    std::vector<bool> clique(n, false);
    clique[0] = true;
    for (Mask s = 1; s < n; ++s) {
        Mask low = s & -s;
        Mask rest = s ^ low;
        int v = std::countr_zero(low) + 1;
        if (!mask_test(G.vertices, v)) continue;
        clique[s] = clique[rest] && (G.adj[v - 1] & rest) == rest;
    }

    FlagificationResult out;
    out.flag_complex.m = K.m;
    for (Mask s = 0; s < n; ++s)
        if (clique[s]) {
            out.flag_complex.faces.push_back(s);
            if (!K.contains(s)) out.added_faces.push_back(s);
        }
    std::sort(out.added_faces.begin(), out.added_faces.end(), size_lex_less);
    return out;
}

bool is_minimal_flag_extension(const SimplicialComplex& K, const SimplicialComplex& F) {
    if (K.m != F.m)
        throw std::invalid_argument("ground set mismatch: " + std::to_string(K.m) + " vs " + std::to_string(F.m));
    return F == flagify(K).flag_complex;
}

}  // namespace polyprod
