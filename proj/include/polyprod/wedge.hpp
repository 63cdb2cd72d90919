// The wedge decomposition of (CY,Y)^K for a flag complex K with chordal
// 1-skeleton: one summand ΣY_{i_1}∧⋯∧Y_{i_k} per subset ω = {i_1,...,i_k}
// with multiplicity c(ω) = (number of connected components of K_ω) - 1.
// When every Y_i is a sphere S^{n_i - 1} the summand on ω is the sphere of
// dimension 1 + Σ_{i∈ω}(n_i - 1); the moment-angle case is n_i = 2 for all
// i, giving spheres of dimension |ω| + 1.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/series.hpp"

namespace polyprod {

enum class PairsMode { MomentAngle, Spheres, Symbolic };

struct SphereAssignment {
    std::vector<int> dims;  // n_i >= 1; Y_i = S^{n_i - 1}

    static SphereAssignment moment_angle(int m) { return SphereAssignment{std::vector<int>(m, 2)}; }
    int summand_dim(Mask omega) const {
        int d = 1;
        for (int v : mask_vertices(omega)) d += dims[static_cast<std::size_t>(v - 1)] - 1;
        return d;
    }
};

struct WedgeSummand {
    Mask omega = 0;
    long long multiplicity = 0;
    std::optional<int> sphere_dim;  // absent in symbolic mode

    bool operator==(const WedgeSummand&) const = default;
};

struct WedgeDecomposition {
    int m = 0;
    PairsMode mode = PairsMode::MomentAngle;
    std::optional<SphereAssignment> spheres;  // engaged unless symbolic
    std::vector<WedgeSummand> summands;       // (|ω|, lex) order, multiplicity > 0
    std::uint64_t subsets_scanned = 0;
    std::uint64_t zero_multiplicity = 0;
    std::vector<std::string> assumptions;  // hypotheses not checkable symbolically

    // Symbolic summand name, e.g. "S(Y_1^Y_3)".
    static std::string summand_name(Mask omega);
    long long total_multiplicity() const;
};

// Theorem: for flag K on the vertex set [m], the product (CY,Y)^K is a
// co-H-space iff K's 1-skeleton is chordal, and in that case it is the
// wedge computed here. Throws GhostVertexError, NotFlagError (witness: a
// missing face with >= 3 elements) or NotChordalError (witness: chordless
// cycle) when the hypotheses fail.
WedgeDecomposition decompose(const SimplicialComplex& K, PairsMode mode,
                             std::optional<SphereAssignment> spheres = std::nullopt);

// The m-disjoint-points case: multiplicity k-1 on every k-subset. Computed
// by decompose and checked against that closed form.
WedgeDecomposition porter_decomposition(int m);

// 1 + Σ multiplicity · t^{sphere_dim}. For a symbolic decomposition pass
// the sphere assignment explicitly.
PoincareSeries poincare_polynomial(const WedgeDecomposition& dec);
PoincareSeries poincare_polynomial(const WedgeDecomposition& dec, const SphereAssignment& spheres);

}  // namespace polyprod
