// Loop-space factor enumeration for wedges of spheres. The loops on
// ΣX_1 ∨ ⋯ ∨ ΣX_m split as a product indexed by a basis of the free Lie
// algebra on m generators; Lyndon words are the canonical such basis. For
// X_i = S^{n_i - 1} the basis element with multidegree α contributes the
// factor Ω S^{n(α)} with n(α) = 1 + Σ_i α_i (n_i - 1).

#pragma once

#include <string>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/series.hpp"

namespace polyprod {

struct LieBasisElement {
    std::vector<int> word;         // letters 1..m, strictly smallest among its rotations
    std::vector<int> multidegree;  // occurrence count per letter, size m

    std::string str() const;  // "x1.x1.x2"

    bool operator==(const LieBasisElement&) const = default;
};

// All Lyndon words over m letters whose weighted degree Σ α_i w_i is at
// most max_weight, in lexicographic order. Unit weights by default.
std::vector<LieBasisElement> lyndon_words(int m, int max_weight, const std::vector<int>& weights = {});

// Number of Lyndon words with the given multidegree, by the
// Möbius/necklace formula  (1/n) Σ_{d | gcd α} μ(d) · (n/d)! / Π (α_i/d)! .
long long witt_count(const std::vector<int>& multidegree);

long long mobius(long long n);

enum class FactorKind { LoopOnSphere, Sphere };

struct HMFactor {
    LieBasisElement basis_element;
    int sphere_dim = 0;  // n: the factor is ΩS^n, or the sphere S^n itself
    FactorKind kind = FactorKind::LoopOnSphere;
    bool via_hopf = false;  // split-off ΩS^{2n-1} reaching the wedge through the Hopf map

    // Homology series of the factor: 1/(1-t^{n-1}) for ΩS^n, 1+t^n for S^n.
    PoincareSeries series(int max_degree) const;
    // How the factor maps into the looped polyhedral product.
    std::string attaching_map() const;

    bool operator==(const HMFactor&) const = default;
};

// One factor ΩS^{n(α)} per Lie basis element with n(α) <= max_dim, for
// pairs (S^{n_i}, *) with n_i >= 2.
std::vector<HMFactor> hm_factors(const std::vector<int>& dims, int max_dim);

// Verifies Π_α (1 - t^{n(α)-1})^{-1} = (1 - Σ_i t^{n_i-1})^{-1} up to
// degree max_dim (the series form of the loop-space splitting).
struct SeriesCheck {
    bool ok = false;
    PoincareSeries factor_side, wedge_side;
};
SeriesCheck series_identity_check(const std::vector<int>& dims, int max_dim);

// Loop-space factors of the moment-angle complex over a flag complex with
// chordal 1-skeleton: the wedge summands S^{|ω|+1} feed the splitting, one
// letter per summand copy. With split_hopf, every ΩS^n with n ∈ {4,8} is
// listed as S^{n-1} × ΩS^{2n-1}. Looping the Davis–Januszkiewicz space adds
// m circle factors: ΩDJ(K) = (S^1)^m × ΩZ_K.
struct LoopSpaceFactors {
    int circle_count = 0;         // the (S^1)^m of ΩDJ(K)
    std::vector<int> wedge_dims;  // sphere dimension of each wedge letter
    bool hopf_split = false;
    std::vector<HMFactor> factors;

    PoincareSeries series(int max_degree) const;
};
LoopSpaceFactors loop_zk_factors(const SimplicialComplex& K, int max_dim, bool split_hopf = false);

}  // namespace polyprod
