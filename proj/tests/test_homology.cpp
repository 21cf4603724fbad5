#include <doctest.h>

#include <vector>

#include "cpow/complex.hpp"
#include "cpow/errors.hpp"
#include "cpow/families.hpp"
#include "cpow/graph.hpp"
#include "cpow/homology.hpp"
#include "snf_oracle.hpp"

using namespace cpw;

namespace {

// Minimal 6-vertex triangulation of the real projective plane: the quotient
// of the icosahedron boundary by the antipodal map.  H_1 = Z/2.
SimplicialComplex projective_plane() {
    std::vector<Face> tri = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                             {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
    return SimplicialComplex::from_faces(6, tri);
}

HomologyProfile sphere_profile(int d) {
    return WedgePrediction::sphere(d).profile();
}

} // namespace

TEST_CASE("homology of spheres of every small dimension") {
    for (int d = 0; d <= 5; ++d) {
        SimplicialComplex s = SimplicialComplex::simplex_boundary(d + 2);
        CHECK(equal_profiles(integer_homology(s), sphere_profile(d)));
    }
}

TEST_CASE("homology of degenerate complexes") {
    HomologyProfile full = integer_homology(SimplicialComplex::full_simplex(5));
    CHECK(full.trivial());

    HomologyProfile empty = integer_homology(SimplicialComplex::empty_complex(2));
    CHECK(empty.betti_minus_one == 1);
    CHECK(!empty.trivial());

    HomologyProfile v = integer_homology(SimplicialComplex::void_complex(2));
    CHECK(v.betti_minus_one == 0);
    CHECK(v.trivial());

    // two points: one reduced 0-class
    SimplicialComplex pts = SimplicialComplex::from_faces(2, std::vector<Face>{{0}, {1}});
    HomologyProfile p = integer_homology(pts);
    CHECK(p.betti == std::vector<std::int64_t>{1});
}

TEST_CASE("projective plane has 2-torsion invisible over the rationals") {
    SimplicialComplex rp2 = projective_plane();
    CHECK(rp2.f_vector() == std::vector<std::int64_t>{6, 15, 10});

    HomologyProfile h = integer_homology(rp2);
    h.normalize();
    // betti ranks all vanish; the level-1 slot survives to carry the torsion
    CHECK(h.betti == std::vector<std::int64_t>{0, 0});
    CHECK(h.torsion == std::vector<std::vector<long long>>{{}, {2}});

    FieldBetti q = betti_rational(rp2);
    q.normalize();
    CHECK(q.betti.empty());

    FieldBetti f2 = betti_mod_p(rp2, 2);
    f2.normalize();
    CHECK(f2.betti == std::vector<std::int64_t>{0, 1, 1});

    FieldBetti f3 = betti_mod_p(rp2, 3);
    f3.normalize();
    CHECK(f3.betti.empty());

    // the rational shadow forgets the torsion
    CHECK(equal_field_betti(rational_shadow(h), q));

    // the slow oracle agrees, torsion included
    CHECK(equal_profiles(h, oracle::homology_profile(rp2)));
}

TEST_CASE("torus built as a product-like triangulation") {
    // 7-vertex Moebius-Kantor torus triangulation (vertices mod 7)
    std::vector<Face> tri;
    for (int i = 0; i < 7; ++i) {
        tri.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tri.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    for (Face& f : tri) std::sort(f.begin(), f.end());
    SimplicialComplex t = SimplicialComplex::from_faces(7, tri);
    CHECK(t.f_vector() == std::vector<std::int64_t>{7, 21, 14});
    HomologyProfile h = integer_homology(t);
    CHECK(h.betti == std::vector<std::int64_t>{0, 2, 1});
    for (const auto& lvl : h.torsion) CHECK(lvl.empty());
    CHECK(equal_profiles(h, oracle::homology_profile(t)));
}

TEST_CASE("boundary matrices compose to zero") {
    for (std::uint64_t seed : {21, 22, 23}) {
        Graph g = random_graph(8, 0.6, seed);
        SimplicialComplex k = clique_complex(g);
        CHECK(verify_boundary_squared(k));
    }
    CHECK(verify_boundary_squared(projective_plane()));
    CHECK(verify_boundary_squared(SimplicialComplex::full_simplex(6)));
    // homology with the self-check switched on
    HomologyProfile h = integer_homology(projective_plane(), {kDefaultFaceLimit, true});
    CHECK(h.torsion[1] == std::vector<long long>{2});
}

TEST_CASE("optimized homology matches the dense oracle on mixed complexes") {
    std::vector<SimplicialComplex> corpus;
    corpus.push_back(clique_complex(power(cycle_graph(8), 2)));
    corpus.push_back(independence_complex(cycle_graph(9)));
    corpus.push_back(suspension(projective_plane()));
    corpus.push_back(join(SimplicialComplex::simplex_boundary(3),
                          SimplicialComplex::simplex_boundary(3)));
    corpus.push_back(barycentric_subdivision(SimplicialComplex::simplex_boundary(3)).complex);
    for (std::uint64_t seed : {31, 32, 33, 34})
        corpus.push_back(clique_complex(random_graph(7, 0.55, seed)));
    for (const SimplicialComplex& k : corpus)
        CHECK(equal_profiles(integer_homology(k), oracle::homology_profile(k)));
}

TEST_CASE("suspension shifts the homology profile") {
    std::vector<SimplicialComplex> corpus = {
        projective_plane(),
        clique_complex(cycle_graph(6)),
        independence_complex(cycle_graph(7)),
        SimplicialComplex::empty_complex(0),
        SimplicialComplex::from_faces(3, std::vector<Face>{{0}, {1}, {2}}),
    };
    for (const SimplicialComplex& k : corpus)
        CHECK(equal_profiles(integer_homology(suspension(k)),
                             integer_homology(k).suspended()));
}

TEST_CASE("field betti numbers respect universal coefficient bounds") {
    for (std::uint64_t seed : {41, 42, 43}) {
        SimplicialComplex k = clique_complex(random_graph(8, 0.5, seed));
        FieldBetti q = betti_rational(k);
        for (unsigned p : {2u, 3u, 5u}) {
            FieldBetti fp = betti_mod_p(k, p);
            // mod-p ranks dominate rational ranks dimensionwise
            for (std::size_t d = 0; d < q.betti.size(); ++d) {
                std::int64_t fpd = d < fp.betti.size() ? fp.betti[d] : 0;
                CHECK(q.betti[d] <= fpd);
            }
            // Euler characteristic is field independent
            std::int64_t eq = -q.betti_minus_one, ep = -fp.betti_minus_one;
            for (std::size_t d = 0; d < q.betti.size(); ++d)
                eq += (d % 2 ? -1 : 1) * q.betti[d];
            for (std::size_t d = 0; d < fp.betti.size(); ++d)
                ep += (d % 2 ? -1 : 1) * fp.betti[d];
            CHECK(eq == ep);
        }
    }
}

TEST_CASE("clique field betti agrees with the direct computation") {
    for (std::uint64_t seed : {51, 52, 53, 54}) {
        Graph g = random_graph(9, 0.45, seed);
        FieldBettiPair pair = clique_field_betti(g, 2);
        CHECK(pair.p == 2);
        FieldBetti q = betti_rational(clique_complex(g));
        FieldBetti f2 = betti_mod_p(clique_complex(g), 2);
        CHECK(equal_field_betti(pair.rational, q));
        CHECK(equal_field_betti(pair.mod_p, f2));
    }
    // complete graph: contractible clique complex, handled without expansion
    FieldBettiPair kp = clique_field_betti(complete_graph(30), 2);
    CHECK(kp.rational.betti_minus_one == 0);
    for (std::int64_t b : kp.rational.betti) CHECK(b == 0);
    CHECK(kp.agree());
}

TEST_CASE("wedge predictions expose profiles and text forms") {
    WedgePrediction c = WedgePrediction::contractible();
    CHECK(c.is_contractible());
    CHECK(c.to_string() == "*");
    CHECK(c.profile().trivial());

    WedgePrediction s3 = WedgePrediction::sphere(3);
    CHECK(s3.to_string() == "S^3");
    CHECK(s3.profile().betti == std::vector<std::int64_t>{0, 0, 0, 1});

    WedgePrediction w = WedgePrediction::wedge(2, 4);
    CHECK(w.to_string() == "v^4 S^2");
    CHECK(w.profile().betti == std::vector<std::int64_t>{0, 0, 4});
    CHECK(w.suspended().to_string() == "v^4 S^3");

    CHECK(WedgePrediction::wedge(5, 0).is_contractible());
    CHECK(WedgePrediction::wedge(0, 3).profile().betti == std::vector<std::int64_t>{3});

    CHECK(matches_wedge(integer_homology(SimplicialComplex::simplex_boundary(4)),
                        WedgePrediction::sphere(2)));
    CHECK(!matches_wedge(integer_homology(projective_plane()), WedgePrediction::sphere(1)));
    CHECK(!matches_wedge(integer_homology(projective_plane()),
                         WedgePrediction::contractible()));
}

TEST_CASE("profile normalization and equality") {
    HomologyProfile a;
    a.betti = {0, 1, 0, 0};
    a.torsion = {{}, {}, {}, {}};
    HomologyProfile b;
    b.betti = {0, 1};
    CHECK(equal_profiles(a, b));
    a.normalize();
    CHECK(a.betti == std::vector<std::int64_t>{0, 1});
    CHECK(a.torsion == std::vector<std::vector<long long>>{{}, {}});

    HomologyProfile t;
    t.torsion = {{2}};
    CHECK(!equal_profiles(t, HomologyProfile{}));
    CHECK(!t.trivial());
}

TEST_CASE("h1 surjectivity of skeleton inclusions") {
    // the 1-skeleton carries all of H_1: inclusion surjective
    SimplicialComplex full = clique_complex(power(cycle_graph(8), 2));
    SimplicialComplex sub = skeleton(full, 1);
    CHECK(h1_inclusion_surjective(sub, full).all());

    // the 0-skeleton kills H_1 of a circle: not surjective
    SimplicialComplex circle = clique_complex(cycle_graph(6));
    H1SurjectivityResult r = h1_inclusion_surjective(skeleton(circle, 0), circle);
    CHECK(!r.rational);
    CHECK(!r.mod2);
    CHECK(!r.all());

    // mismatched vertex sets are rejected
    CHECK_THROWS_AS(h1_inclusion_surjective(clique_complex(cycle_graph(5)), circle),
                    std::invalid_argument);
    // non-subcomplex is rejected
    CHECK_THROWS_AS(
        h1_inclusion_surjective(independence_complex(cycle_graph(6)), circle),
        std::invalid_argument);
}

TEST_CASE("homology respects the face budget") {
    SimplicialComplex k = clique_complex(complete_graph(10));
    CHECK_THROWS_AS(integer_homology(k, {100, false}), face_limit_error);
}
