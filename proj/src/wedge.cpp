#include "polyprod/wedge.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyprod/chordal.hpp"

namespace polyprod {

std::string WedgeDecomposition::summand_name(Mask omega) {
    std::string out = "S(";
    bool first = true;
    for (int v : mask_vertices(omega)) {
        if (!first) out += "^";
        out += "Y_" + std::to_string(v);
        first = false;
    }
    return out + ")";
}

long long WedgeDecomposition::total_multiplicity() const {
    long long total = 0;
    for (const auto& s : summands) total += s.multiplicity;
    return total;
}

WedgeDecomposition decompose(const SimplicialComplex& K, PairsMode mode,
                             std::optional<SphereAssignment> spheres) {
    Mask ghosts = K.ghost_mask();
    if (ghosts)
        throw GhostVertexError(lowest_vertex(ghosts),
                               "complex is not on the vertex set [m]: ghost vertex " +
                                   std::to_string(lowest_vertex(ghosts)));
    if (auto witness = nonflag_witness(K))
        throw NotFlagError(*witness, "complex is not flag: missing face " + format_mask(*witness));
    Graph skeleton = skeleton_graph(K);
    auto cert = is_chordal(skeleton);
    if (!is_peo_certificate(cert)) {
        const auto& cyc = std::get<ChordlessCycleCertificate>(cert).cycle;
        std::string verts;
        for (std::size_t i = 0; i < cyc.size(); ++i) verts += (i ? "," : "") + std::to_string(cyc[i]);
        throw NotChordalError(cyc, "1-skeleton is not chordal: chordless cycle (" + verts +
                                       "); the product is not a co-H-space");
    }

    WedgeDecomposition dec;
    dec.m = K.m;
    dec.mode = mode;
    switch (mode) {
        case PairsMode::MomentAngle:
            dec.spheres = SphereAssignment::moment_angle(K.m);
            break;
        case PairsMode::Spheres:
            if (!spheres || static_cast<int>(spheres->dims.size()) != K.m)
                throw std::invalid_argument("sphere assignment must list one dimension per ground-set element");
            for (int n : spheres->dims)
                if (n < 1) throw std::invalid_argument("sphere dimensions must be >= 1");
            dec.spheres = std::move(spheres);
            break;
        case PairsMode::Symbolic:
            dec.assumptions.push_back("each Y_i has nonzero reduced integral cohomology");
            break;
    }

    for (Mask omega = 0; omega < (Mask{1} << K.m); ++omega) {
        if (popcount(omega) < 2) continue;
        ++dec.subsets_scanned;
        long long c = component_count_induced(skeleton, omega) - 1;
        if (c == 0) {
            ++dec.zero_multiplicity;
            continue;
        }
        WedgeSummand s;
        s.omega = omega;
        s.multiplicity = c;
        if (dec.spheres) s.sphere_dim = dec.spheres->summand_dim(omega);
        dec.summands.push_back(s);
    }
    std::sort(dec.summands.begin(), dec.summands.end(),
              [](const WedgeSummand& a, const WedgeSummand& b) { return size_lex_less(a.omega, b.omega); });
    return dec;
}

WedgeDecomposition porter_decomposition(int m) {
    if (m < 1) throw std::invalid_argument("need at least one point");
    SimplicialComplex points = from_facets(m, [&] {
        std::vector<std::vector<int>> fs;
        for (int v = 1; v <= m; ++v) fs.push_back({v});
        return fs;
    }());
    WedgeDecomposition dec = decompose(points, PairsMode::Symbolic);
    for (const auto& s : dec.summands)
        if (s.multiplicity != popcount(s.omega) - 1)
            throw std::logic_error("discrete-complex multiplicity differs from k-1 at " + format_mask(s.omega));
    std::uint64_t expected = (m >= 2) ? (Mask{1} << m) - 1u - static_cast<std::uint64_t>(m) : 0;
    if (dec.summands.size() != expected)
        throw std::logic_error("discrete-complex decomposition misses a subset");
    return dec;
}

PoincareSeries poincare_polynomial(const WedgeDecomposition& dec, const SphereAssignment& spheres) {
    if (static_cast<int>(spheres.dims.size()) != dec.m)
        throw std::invalid_argument("sphere assignment must list one dimension per ground-set element");
    PoincareSeries p = PoincareSeries::one();
    for (const auto& s : dec.summands) p.add(spheres.summand_dim(s.omega), s.multiplicity);
    return p;
}

PoincareSeries poincare_polynomial(const WedgeDecomposition& dec) {
    if (!dec.spheres)
        throw std::invalid_argument("symbolic decomposition needs an explicit sphere assignment");
    return poincare_polynomial(dec, *dec.spheres);
}

}  // namespace polyprod
