#include "polyprod/complex.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_oracles.hpp"

using namespace polyprod;
using namespace polyprod::testing;

namespace {

std::vector<Mask> sorted_union(std::vector<Mask> a, const std::vector<Mask>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

std::vector<Mask> sorted_intersection(const std::vector<Mask>& a, const std::vector<Mask>& b) {
    std::vector<Mask> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

TEST_SUITE("complex_core") {

TEST_CASE("from_facets closes downward") {
    SimplicialComplex K = from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(K.faces == std::vector<Mask>{0, 0b001, 0b010, 0b011, 0b100, 0b101, 0b110});
    CHECK(K.face_count() == 7);
    CHECK(K.dim() == 1);

    SimplicialComplex empty = from_facets(3, {});
    CHECK(empty.faces == std::vector<Mask>{0});
    CHECK(empty.ghost_mask() == 0b111);
    CHECK(empty.vertex_count() == 0);

    SimplicialComplex square = cycle_complex(4);
    CHECK(square.face_count() == 9);  // 1 + 4 + 4
}

TEST_CASE("from_facets matches a set-based closure") {
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        int m = std::uniform_int_distribution<int>(1, 7)(rng);
        SimplicialComplex K = random_complex(m, rng);
        auto expected = closure_bruteforce(m, facets(K));
        CHECK(std::set<Mask>(K.faces.begin(), K.faces.end()) == expected);
        CHECK_NOTHROW(validate(K));
    }
}

TEST_CASE("from_facets rejects bad input") {
    CHECK_THROWS_AS(from_facets(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(from_facets(-2, {}), std::invalid_argument);
    CHECK_THROWS_AS(from_facets(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(from_facets(3, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_facets(25, {}), std::invalid_argument);        // default guard
    CHECK_NOTHROW(from_facets(25, {}, 26));                             // guard raised
    CHECK_THROWS_AS(from_facets(27, {}, 32), std::invalid_argument);    // hard cap
}

TEST_CASE("star keeps the ground set") {
    SimplicialComplex square = cycle_complex(4);
    SimplicialComplex S = star(square, 1);
    CHECK(S.m == 4);
    CHECK(S.faces == std::vector<Mask>{0, mask_of({1}), mask_of({2}), mask_of({1, 2}), mask_of({4}),
                                       mask_of({1, 4})});
    CHECK(S.ghost_mask() == mask_of({3}));  // 3 is a ghost of the star

    SimplicialComplex tri = simplex(3);
    for (int v = 1; v <= 3; ++v) CHECK(star(tri, v) == tri);

    SimplicialComplex empty = from_facets(2, {});
    CHECK(star(empty, 1).faces == std::vector<Mask>{0});

    CHECK_THROWS_AS(star(square, 0), std::invalid_argument);
    CHECK_THROWS_AS(star(square, 5), std::invalid_argument);
}

TEST_CASE("link and deletion drop the vertex from the ground set") {
    SimplicialComplex square = cycle_complex(4);  // 1-2-3-4-1

    Subcomplex lk = link(square, 1);
    CHECK(lk.complex.m == 3);
    CHECK(lk.old_label == std::vector<int>{2, 3, 4});
    CHECK(lk.new_index == std::vector<int>{0, 1, 2, 3});
    // old vertices {2} and {4} survive; old 3 is a ghost of the link
    CHECK(lk.complex.faces == std::vector<Mask>{0, mask_of({1}), mask_of({3})});
    CHECK(lk.complex.ghost_mask() == mask_of({2}));

    Subcomplex del = deletion(square, 1);
    CHECK(del.complex == path_complex(3));  // old path 2-3-4

    SimplicialComplex tri = simplex(3);
    CHECK(link(tri, 3).complex == from_facets(2, {{1, 2}}));
    CHECK(deletion(tri, 3).complex == from_facets(2, {{1, 2}}));

    for (int m : {2, 3, 5}) {
        SimplicialComplex pts = points(m);
        CHECK(link(pts, 1).complex.faces == std::vector<Mask>{0});
        CHECK(deletion(pts, 1).complex == points(m - 1));
    }
}

TEST_CASE("link equals star intersected with deletion") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int m = std::uniform_int_distribution<int>(1, 7)(rng);
        SimplicialComplex K = random_complex(m, rng);
        int v = std::uniform_int_distribution<int>(1, m)(rng);
        auto star_faces = star(K, v).faces;
        auto del_faces = embed_faces(deletion(K, v));
        CHECK(embed_faces(link(K, v)) == sorted_intersection(star_faces, del_faces));
    }
}

TEST_CASE("pushout identity: K = deletion ∪ star glued along link") {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        int m = std::uniform_int_distribution<int>(1, 7)(rng);
        SimplicialComplex K = random_complex(m, rng);
        int v = std::uniform_int_distribution<int>(1, m)(rng);
        auto star_faces = star(K, v).faces;
        auto del_faces = embed_faces(deletion(K, v));
        CHECK(sorted_union(del_faces, star_faces) == K.faces);
        CHECK(sorted_intersection(del_faces, star_faces) == embed_faces(link(K, v)));
    }
}

TEST_CASE("join") {
    SimplicialComplex pt = points(1);
    CHECK(join(pt, pt) == from_facets(2, {{1, 2}}));  // Δ¹

    SimplicialComplex two = points(2);
    SimplicialComplex j = join(two, two);  // ∂Δ¹ ∗ ∂Δ¹ = a 4-cycle
    CHECK(j.face_count() == 9);
    Graph G = skeleton_graph(j);
    CHECK(G.edges() == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(is_chordal_bruteforce(G) == false);

    // face-count multiplicativity
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        SimplicialComplex K1 = random_complex(std::uniform_int_distribution<int>(1, 5)(rng), rng);
        SimplicialComplex K2 = random_complex(std::uniform_int_distribution<int>(1, 5)(rng), rng);
        SimplicialComplex J = join(K1, K2);
        CHECK(J.face_count() == K1.face_count() * K2.face_count());
        CHECK_NOTHROW(validate(J));
    }
}

TEST_CASE("star is the join of the vertex with the link") {
    Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        int m = std::uniform_int_distribution<int>(1, 7)(rng);
        SimplicialComplex K = random_complex(m, rng);
        int v = std::uniform_int_distribution<int>(1, m)(rng);
        if (!K.contains(mask_bit(v))) continue;  // the identity is about vertices of K
        Subcomplex lk = link(K, v);
        SimplicialComplex joined = join(points(1), lk.complex);
        // relabel: join vertex 1 → v, join vertex 1+i → lk.old_label[i-1]
        std::vector<int> perm(static_cast<std::size_t>(joined.m));
        perm[0] = v;
        for (std::size_t i = 0; i < lk.old_label.size(); ++i) perm[i + 1] = lk.old_label[i];
        SimplicialComplex relabeled = relabel(joined, perm);
        relabeled.m = K.m;
        CHECK(relabeled == star(K, v));
    }
}

TEST_CASE("full subcomplex") {
    SimplicialComplex pent = cycle_complex(5);
    Subcomplex edge = full_subcomplex(pent, mask_of({1, 2}));
    CHECK(edge.complex == from_facets(2, {{1, 2}}));
    Subcomplex two = full_subcomplex(pent, mask_of({1, 3}));
    CHECK(two.complex == points(2));

    Rng rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        int m = std::uniform_int_distribution<int>(1, 7)(rng);
        SimplicialComplex K = random_complex(m, rng);
        int v = std::uniform_int_distribution<int>(1, m)(rng);
        CHECK(full_subcomplex(K, full_mask(m) & ~mask_bit(v)) == deletion(K, v));
    }
}

TEST_CASE("missing faces and flagness") {
    SimplicialComplex btri = boundary_simplex(3);
    CHECK(missing_faces(btri) == std::vector<Mask>{mask_of({1, 2, 3})});
    CHECK(is_flag(btri) == false);
    CHECK(nonflag_witness(btri) == mask_of({1, 2, 3}));

    for (int m = 4; m <= 8; ++m) {
        SimplicialComplex cyc = cycle_complex(m);
        CHECK(is_flag(cyc));
        for (Mask w : missing_faces(cyc)) CHECK(popcount(w) == 2);
    }

    CHECK(missing_faces(cycle_complex(4)) == std::vector<Mask>{mask_of({1, 3}), mask_of({2, 4})});

    // a ghost vertex is a missing face of size one
    SimplicialComplex ghost = from_facets(2, {{1}});
    CHECK(missing_faces(ghost) == std::vector<Mask>{mask_of({2})});
    CHECK(is_flag(ghost));

    Rng rng(16);
    for (int trial = 0; trial < 60; ++trial) {
        int m = std::uniform_int_distribution<int>(1, 7)(rng);
        SimplicialComplex K = random_complex(m, rng);
        auto mf = missing_faces(K);
        CHECK(std::set<Mask>(mf.begin(), mf.end()) == missing_faces_bruteforce(K));
        CHECK(std::is_sorted(mf.begin(), mf.end(), size_lex_less));
        bool flag = true;
        for (Mask w : mf)
            if (popcount(w) >= 3) flag = false;
        CHECK(is_flag(K) == flag);
        CHECK(nonflag_witness(K).has_value() == !flag);
    }
}

TEST_CASE("flag lemmas: deletion, star and link of a flag complex are flag") {
    Rng rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        int m = std::uniform_int_distribution<int>(2, 7)(rng);
        SimplicialComplex K = random_flag_complex(m, rng);
        REQUIRE(is_flag(K));
        for (int v = 1; v <= m; ++v) {
            if (!K.contains(mask_bit(v))) continue;
            CHECK(is_flag(deletion(K, v).complex));
            CHECK(is_flag(star(K, v)));
            CHECK(is_flag(link(K, v).complex));
        }
    }
}

TEST_CASE("flag lemma: the link is a full subcomplex of the deletion") {
    Rng rng(18);
    for (int trial = 0; trial < 80; ++trial) {
        int m = std::uniform_int_distribution<int>(2, 7)(rng);
        SimplicialComplex K = random_flag_complex(m, rng);
        for (int v = 1; v <= m; ++v) {
            if (!K.contains(mask_bit(v))) continue;
            Subcomplex lk = link(K, v);
            Subcomplex del = deletion(K, v);
            Mask omega = lk.complex.vertex_mask();  // in the [m]\{v} indexing shared by both
            auto restricted = full_subcomplex(del.complex, omega);
            std::vector<Mask> embedded;
            for (Mask f : restricted.complex.faces) embedded.push_back(expand_mask(f, omega));
            std::sort(embedded.begin(), embedded.end());
            CHECK(embedded == lk.complex.faces);
        }
    }
}

TEST_CASE("flag lemma: missing faces of the link are missing faces of the deletion") {
    Rng rng(19);
    for (int trial = 0; trial < 80; ++trial) {
        int m = std::uniform_int_distribution<int>(2, 7)(rng);
        SimplicialComplex K = random_flag_complex(m, rng);
        for (int v = 1; v <= m; ++v) {
            if (!K.contains(mask_bit(v))) continue;
            auto del_missing = missing_faces(deletion(K, v).complex);
            std::set<Mask> del_set(del_missing.begin(), del_missing.end());
            for (Mask w : missing_faces(link(K, v).complex))
                if (popcount(w) >= 2) CHECK(del_set.count(w) == 1);
        }
    }
}

TEST_CASE("skeleton graph and components") {
    CHECK(connected_component_count(points(3)) == 3);
    CHECK(connected_component_count(cycle_complex(5)) == 1);
    CHECK(connected_component_count(from_facets(3, {})) == 0);
    CHECK(connected_component_count(full_subcomplex(cycle_complex(5), mask_of({1, 2, 4})).complex) == 2);

    Graph G = skeleton_graph(cycle_complex(4));
    CHECK(G.vertex_count() == 4);
    CHECK(G.edge_count() == 4);
    CHECK(G.has_edge(1, 2));
    CHECK(!G.has_edge(1, 3));

    // ghosts do not appear in the skeleton
    Graph H = skeleton_graph(from_facets(4, {{1, 2}}));
    CHECK(H.vertices == mask_of({1, 2}));
    CHECK(component_count_induced(H, mask_of({3, 4})) == 0);
}

TEST_CASE("validate rejects broken complexes") {
    SimplicialComplex no_empty{2, {mask_of({1})}};
    CHECK_THROWS_AS(validate(no_empty), std::logic_error);
    SimplicialComplex not_closed{2, {0, mask_of({1, 2})}};
    CHECK_THROWS_AS(validate(not_closed), std::logic_error);
    SimplicialComplex unsorted{2, {0, mask_of({2}), mask_of({1})}};
    CHECK_THROWS_AS(validate(unsorted), std::logic_error);
    SimplicialComplex out_of_range{1, {0, mask_of({2})}};
    CHECK_THROWS_AS(validate(out_of_range), std::logic_error);
}

TEST_CASE("operations preserve validity") {
    Rng rng(20);
    for (int trial = 0; trial < 60; ++trial) {
        int m = std::uniform_int_distribution<int>(2, 7)(rng);
        SimplicialComplex K = random_complex(m, rng);
        int v = std::uniform_int_distribution<int>(1, m)(rng);
        CHECK_NOTHROW(validate(star(K, v)));
        CHECK_NOTHROW(validate(deletion(K, v).complex));
        if (link(K, v).complex.m >= 1) CHECK_NOTHROW(validate(link(K, v).complex));
        Mask omega = std::uniform_int_distribution<Mask>(1, full_mask(m))(rng);
        CHECK_NOTHROW(validate(full_subcomplex(K, omega).complex));
    }
}

}  // TEST_SUITE
