// Exact Betti numbers over the rationals: reduced simplicial (co)homology of
// a complex, and the moment-angle Betti table assembled from all full
// subcomplexes. This is the independent cross-check for the wedge
// decomposition, so it goes through boundary matrices and exact rank
// computation only — no use of the decomposition itself.

#pragma once

#include <map>
#include <variant>
#include <vector>

#include "polyprod/chordal.hpp"
#include "polyprod/complex.hpp"
#include "polyprod/series.hpp"

namespace polyprod {

// Signed incidence matrix between consecutive dimensions; rows are
// (d-1)-faces, columns are d-faces, entries in {-1,0,+1}. Dimension -1 is
// the empty face, so the d = 0 matrix is the augmentation row.
struct BoundaryMatrix {
    int d = 0;  // domain dimension
    std::vector<Mask> rows, cols;
    std::vector<std::vector<long long>> entries;
};

// Boundary matrices of K for every dimension 0..dim(K).
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& K);

// Rank over the rationals via fraction-free elimination; exact for any
// integer matrix (falls back to big integers if 64-bit minors overflow).
int matrix_rank(const std::vector<std::vector<long long>>& entries);

// Reduced Betti numbers of K indexed from degree -1: element i is the rank
// in degree i-1. The complex {∅} has rank one in degree -1.
std::vector<long long> reduced_betti_all(const SimplicialComplex& K);

long long reduced_betti(const SimplicialComplex& K, int degree);

struct BettiTable {
    std::map<int, long long> ranks;  // degree → rank; zero ranks omitted

    long long rank(int degree) const {
        auto it = ranks.find(degree);
        return it == ranks.end() ? 0 : it->second;
    }
    void add(int degree, long long r) {
        if (r != 0) ranks[degree] += r;
    }
    int max_degree() const { return ranks.empty() ? 0 : ranks.rbegin()->first; }

    bool operator==(const BettiTable&) const = default;
};

// Betti numbers of the moment-angle complex over K:
//   b_j = Σ_{ω ⊆ [m]} rank H̃^{j-|ω|-1}(K_ω).
// Requires K without ghost vertices (throws GhostVertexError).
BettiTable betti_zk(const SimplicialComplex& K);

// Two-sided check of the wedge decomposition against the oracle. Requires
// flag K without ghost vertices (throws NotFlagError / GhostVertexError).
struct VerificationReport {
    bool chordal = false;

    // chordal branch: the wedge polynomial must match the Betti table and
    // every full subcomplex must have vanishing H̃^{>=1}.
    PoincareSeries wedge_polynomial;
    BettiTable oracle;
    bool betti_match = false;
    bool subcomplexes_acyclic = false;

    // non-chordal branch: the chordless cycle's vertex set carries a
    // 1-dimensional cohomology class, so no wedge of the decomposition's
    // shape exists and the polyhedral product is not a co-H-space.
    ChordlessCycleCertificate cycle;
    Mask witness_omega = 0;
    long long witness_h1 = 0;

    bool pass() const { return chordal && betti_match && subcomplexes_acyclic; }
};

VerificationReport verify_decomposition(const SimplicialComplex& K);

}  // namespace polyprod
