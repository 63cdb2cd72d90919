#include "polyprod/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyprod/errors.hpp"
#include "polyprod/wedge.hpp"

namespace polyprod {

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& K) {
    const int top = K.dim();
    std::vector<std::vector<Mask>> by_dim(static_cast<std::size_t>(top + 2));
    for (Mask f : K.faces) by_dim[static_cast<std::size_t>(popcount(f))].push_back(f);

    std::vector<BoundaryMatrix> out;
    for (int d = 0; d <= top; ++d) {
        BoundaryMatrix B;
        B.d = d;
        B.rows = by_dim[static_cast<std::size_t>(d)];
        B.cols = by_dim[static_cast<std::size_t>(d + 1)];
        B.entries.assign(B.rows.size(), std::vector<long long>(B.cols.size(), 0));
        for (std::size_t j = 0; j < B.cols.size(); ++j) {
            Mask f = B.cols[j];
            int sign = 1;
            for (Mask t = f; t; t &= t - 1) {  // vertices ascending
                Mask facet = f & ~(t & -t);
                auto it = std::lower_bound(B.rows.begin(), B.rows.end(), facet);
                B.entries[static_cast<std::size_t>(it - B.rows.begin())][j] = sign;
                sign = -sign;
            }
        }
        out.push_back(std::move(B));
    }
    return out;
}

namespace {

struct Int64Overflow {};

// Fraction-free (Bareiss) elimination: every intermediate value is a minor
// of the input, divisions are exact. The int64 instantiation watches for
// overflow and defers to big integers.
template <typename T>
int rank_bareiss(std::vector<std::vector<T>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    T prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                if constexpr (std::is_same_v<T, long long>) {
                    __int128 num = static_cast<__int128>(a[r][c]) * a[i][j] -
                                   static_cast<__int128>(a[i][c]) * a[r][j];
                    __int128 q = num / prev;
                    if (q > INT64_MAX || q < INT64_MIN) throw Int64Overflow{};
                    a[i][j] = static_cast<long long>(q);
                } else {
                    a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
                }
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

int matrix_rank(const std::vector<std::vector<long long>>& entries) {
    try {
        return rank_bareiss<long long>(entries);
    } catch (const Int64Overflow&) {
        std::vector<std::vector<boost::multiprecision::cpp_int>> wide(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i)
            wide[i].assign(entries[i].begin(), entries[i].end());
        return rank_bareiss<boost::multiprecision::cpp_int>(std::move(wide));
    }
}

std::vector<long long> reduced_betti_all(const SimplicialComplex& K) {
    const int top = K.dim();
    // chain ranks per dimension, from -1 (the empty face) to top
    std::vector<long long> chain(static_cast<std::size_t>(top + 2), 0);
    for (Mask f : K.faces) ++chain[static_cast<std::size_t>(popcount(f))];

    // boundary ranks: boundary_rank[d+1] = rank ∂_d for d = 0..top; the
    // d = 0 matrix is the augmentation C_0 → C_{-1}.
    std::vector<int> boundary_rank(static_cast<std::size_t>(top + 3), 0);
    for (const auto& B : boundary_matrices(K)) {
        if (B.d == 0)
            boundary_rank[1] = B.cols.empty() ? 0 : 1;  // all-ones row
        else
            boundary_rank[static_cast<std::size_t>(B.d) + 1] = matrix_rank(B.entries);
    }

    std::vector<long long> betti(static_cast<std::size_t>(top + 2), 0);
    for (int i = -1; i <= top; ++i)
        betti[static_cast<std::size_t>(i + 1)] = chain[static_cast<std::size_t>(i + 1)] -
                                                 boundary_rank[static_cast<std::size_t>(i + 1)] -
                                                 boundary_rank[static_cast<std::size_t>(i + 2)];
    return betti;
}

long long reduced_betti(const SimplicialComplex& K, int degree) {
    if (degree < -1) return 0;
    auto betti = reduced_betti_all(K);
    std::size_t idx = static_cast<std::size_t>(degree + 1);
    return idx < betti.size() ? betti[idx] : 0;
}

BettiTable betti_zk(const SimplicialComplex& K) {
    Mask ghosts = K.ghost_mask();
    if (ghosts)
        throw GhostVertexError(lowest_vertex(ghosts),
                               "moment-angle Betti numbers need a complex without ghost vertices; vertex " +
                                   std::to_string(lowest_vertex(ghosts)) + " is ghost");
    BettiTable table;
    for (Mask omega = 0; omega < (Mask{1} << K.m); ++omega) {
        auto betti = reduced_betti_all(full_subcomplex(K, omega).complex);
        int size = popcount(omega);
        for (std::size_t i = 0; i < betti.size(); ++i)
            table.add(static_cast<int>(i) - 1 + size + 1, betti[i]);
    }
    return table;
}

VerificationReport verify_decomposition(const SimplicialComplex& K) {
    Mask ghosts = K.ghost_mask();
    if (ghosts)
        throw GhostVertexError(lowest_vertex(ghosts), "verification needs a complex without ghost vertices");
    if (auto witness = nonflag_witness(K))
        throw NotFlagError(*witness, "complex is not flag: missing face " + format_mask(*witness));

    VerificationReport report;
    Graph skeleton = skeleton_graph(K);
    auto cert = is_chordal(skeleton);
    if (!is_peo_certificate(cert)) {
        report.chordal = false;
        report.cycle = std::get<ChordlessCycleCertificate>(cert);
        report.witness_omega = mask_of(report.cycle.cycle);
        report.witness_h1 = reduced_betti(full_subcomplex(K, report.witness_omega).complex, 1);
        report.oracle = betti_zk(K);
        return report;
    }

    report.chordal = true;
    report.wedge_polynomial = poincare_polynomial(decompose(K, PairsMode::MomentAngle));

    // One sweep serves both the Betti table and the vanishing check.
    report.subcomplexes_acyclic = true;
    for (Mask omega = 0; omega < (Mask{1} << K.m); ++omega) {
        auto betti = reduced_betti_all(full_subcomplex(K, omega).complex);
        int size = popcount(omega);
        for (std::size_t i = 0; i < betti.size(); ++i) {
            report.oracle.add(static_cast<int>(i) - 1 + size + 1, betti[i]);
            if (i >= 2 && betti[i] != 0) report.subcomplexes_acyclic = false;  // degrees >= 1
        }
    }

    report.betti_match = true;
    int max_deg = std::max(report.wedge_polynomial.degree(), report.oracle.max_degree());
    for (int j = 0; j <= max_deg; ++j)
        if (report.wedge_polynomial.at(j) != report.oracle.rank(j)) report.betti_match = false;
    return report;
}

}  // namespace polyprod
