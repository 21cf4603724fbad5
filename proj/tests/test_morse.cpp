#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cpow/complex.hpp"
#include "cpow/families.hpp"
#include "cpow/graph.hpp"
#include "cpow/homology.hpp"
#include "cpow/morse.hpp"

using namespace cpw;

TEST_CASE("all_faces lists every face in canonical order") {
    SimplicialComplex d2 = SimplicialComplex::full_simplex(3);
    std::vector<Face> fs = all_faces(d2);
    std::vector<Face> expected = {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    CHECK(fs == expected);

    CHECK(all_faces(SimplicialComplex::empty_complex(2)) == std::vector<Face>{{}});
    CHECK(all_faces(SimplicialComplex::void_complex(2)).empty());
}

TEST_CASE("a perfect matching on an edge is accepted") {
    SimplicialComplex edge = SimplicialComplex::full_simplex(2);
    Matching m;
    m.pairs = {{Face{}, Face{0}}, {Face{1}, Face{0, 1}}};
    MatchingCheck c = verify_matching(edge, m);
    CHECK(c.ok);
    CHECK(critical_faces(edge, m).empty());

    // drop one pair: the two faces of that pair become critical
    Matching half;
    half.pairs = {{Face{1}, Face{0, 1}}};
    CHECK(verify_matching(edge, half).ok);
    CHECK(critical_faces(edge, half) == std::vector<Face>{{}, {0}});
}

TEST_CASE("malformed matchings are rejected with reasons") {
    SimplicialComplex d2 = SimplicialComplex::full_simplex(3);

    // wrong codimension
    Matching skip;
    skip.pairs = {{Face{0}, Face{0, 1, 2}}};
    CHECK(!verify_matching(d2, skip).ok);

    // not a containment
    Matching apart;
    apart.pairs = {{Face{0}, Face{1, 2}}};
    CHECK(!verify_matching(d2, apart).ok);

    // face reused across pairs
    Matching dup;
    dup.pairs = {{Face{0}, Face{0, 1}}, {Face{0}, Face{0, 2}}};
    CHECK(!verify_matching(d2, dup).ok);

    // face outside the complex is a caller error
    SimplicialComplex path = clique_complex(path_graph(3));
    Matching foreign;
    foreign.pairs = {{Face{0, 2}, Face{0, 1, 2}}};
    CHECK_THROWS_AS(verify_matching(path, foreign), std::invalid_argument);

    // critical_faces refuses an invalid matching
    CHECK_THROWS_AS(critical_faces(d2, skip), std::invalid_argument);
}

TEST_CASE("a cyclic vector field is caught with a witness path") {
    // triangle boundary: pair each vertex with the edge to its successor;
    // the closed V-path around the circle violates acyclicity
    SimplicialComplex c3 = clique_complex(cycle_graph(3));
    Matching m;
    m.pairs = {{Face{0}, Face{0, 1}}, {Face{1}, Face{1, 2}}, {Face{2}, Face{0, 2}}};
    MatchingCheck c = verify_matching(c3, m);
    CHECK(!c.ok);
    CHECK(!c.cycle.empty());
    CHECK(!c.message.empty());
    // the witness alternates faces and visits only matched cells
    for (const Face& f : c.cycle) CHECK((f.size() == 1 || f.size() == 2));
    CHECK(c.cycle.front() == c.cycle.back());
}

TEST_CASE("elementary collapse of a simplex to a point") {
    SimplicialComplex d2 = SimplicialComplex::full_simplex(3);
    SimplicialComplex pt = SimplicialComplex::from_faces(3, std::vector<Face>{{0}});
    CollapseResult r = elementary_collapse(d2, pt);
    CHECK(r.collapsed);
    CHECK(r.steps.size() == 3); // 7 nonempty faces down to 1

    // a circle does not collapse to a point
    SimplicialComplex c6 = clique_complex(cycle_graph(6));
    SimplicialComplex v0 = SimplicialComplex::from_faces(6, std::vector<Face>{{0}});
    CHECK(!elementary_collapse(c6, v0).collapsed);

    // collapsing onto itself is a no-op
    CollapseResult same = elementary_collapse(c6, c6);
    CHECK(same.collapsed);
    CHECK(same.steps.empty());
}

TEST_CASE("girth matching collapses one power step down") {
    // C_13 has girth 13 > 9, so the k = 3 step applies
    Graph g = cycle_graph(13);
    Matching m = girth_matching(g, 3);
    SimplicialComplex big = clique_complex(power(g, 3));
    SimplicialComplex small = clique_complex(power(g, 2));

    MatchingCheck c = verify_matching(big, m);
    CHECK(c.ok);
    CHECK(critical_faces(big, m) == all_faces(small));
    CHECK(elementary_collapse(big, small).collapsed);

    // homotopy equivalence confirmed homologically
    CHECK(equal_profiles(integer_homology(big), integer_homology(small)));
}

TEST_CASE("girth matching applies to forests of any power") {
    Graph t = random_tree(10, 8);
    for (int k = 2; k <= 4; ++k) {
        Matching m = girth_matching(t, k);
        SimplicialComplex big = clique_complex(power(t, k));
        CHECK(verify_matching(big, m).ok);
        CHECK(critical_faces(big, m) == all_faces(clique_complex(power(t, k - 1))));
    }
}

TEST_CASE("girth matching rejects bad parameters") {
    CHECK_THROWS_AS(girth_matching(cycle_graph(13), 1), std::invalid_argument);
    // girth 6 == 3k for k = 2: hypothesis needs strict inequality
    CHECK_THROWS_AS(girth_matching(cycle_graph(6), 2), std::invalid_argument);
    CHECK_THROWS_AS(girth_matching(cycle_graph(9), 3), std::invalid_argument);
    // girth 7 > 6 works
    Matching ok = girth_matching(cycle_graph(7), 2);
    CHECK(verify_matching(clique_complex(power(cycle_graph(7), 2)), ok).ok);
}
