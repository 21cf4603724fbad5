#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpow/checks.hpp"
#include "cpow/complex.hpp"
#include "cpow/families.hpp"
#include "cpow/graph.hpp"
#include "cpow/homology.hpp"

using namespace cpw;

TEST_CASE("cycle power predictions at frozen instances") {
    auto text = [](int n, int r) { return predict_clique_cycle_power(n, r).to_string(); };

    // r = 0: a discrete set of n points
    CHECK(text(5, 0) == "v^4 S^0");
    CHECK(text(3, 0) == "v^2 S^0");

    // staple small cases
    CHECK(text(6, 2) == "S^2");
    CHECK(text(7, 2) == "S^1");
    CHECK(text(9, 3) == "v^2 S^2");
    CHECK(text(10, 4) == "S^4");
    CHECK(text(12, 4) == "v^3 S^2");
    CHECK(text(12, 5) == "S^5");
    CHECK(text(14, 5) == "S^3");
    CHECK(text(14, 6) == "S^6");

    // larger frozen cells
    CHECK(text(18, 7) == "S^3");
    CHECK(text(18, 8) == "S^8");
    CHECK(text(20, 8) == "v^3 S^4");
    CHECK(text(20, 9) == "S^9");
    CHECK(text(25, 9) == "S^3");
    CHECK(text(25, 10) == "v^4 S^4");
    CHECK(text(25, 11) == "S^7");
    CHECK(text(25, 12) == "*");
    CHECK(text(30, 12) == "v^5 S^4");
    CHECK(text(30, 13) == "S^7");
    CHECK(text(30, 14) == "S^14");

    // 2r >= n collapses to a simplex
    CHECK(text(9, 5) == "*");
    CHECK(text(8, 4) == "*");

    CHECK_THROWS_AS(predict_clique_cycle_power(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(predict_clique_cycle_power(5, -1), std::invalid_argument);
}

TEST_CASE("independence predictions for circulants") {
    // (9, 2): r = 3 divisible by k + 1 = 3, l = 1 -> wedge of two 2-spheres
    CHECK(predict_ind_circular(9, 2).to_string() == "v^2 S^2");
    // (11, 2): r = 4, remainder 1 -> odd sphere
    CHECK(predict_ind_circular(11, 2).to_string() == "S^3");
    // k = 0 is the complete-graph edge of the identity: contractible
    CHECK(predict_ind_circular(7, 0).is_contractible());
    CHECK(predict_ind_circular(5, 2).to_string() == "S^1");

    CHECK_THROWS_AS(predict_ind_circular(8, 4), std::invalid_argument); // n - k - 1 odd
    CHECK_THROWS_AS(predict_ind_circular(6, 7), std::invalid_argument);
}

TEST_CASE("prediction identities hold across the stress range") {
    CheckReport r = validate_prediction_consistency(60);
    CHECK(r.pass);
    CHECK(r.id == "predictions");
}

TEST_CASE("square condition evaluations are frozen") {
    // the three-sun: the big clique of the square is covered by no closed
    // neighborhood
    SquareCondition sun = check_square_condition(three_sun());
    CHECK(!sun.holds);
    CHECK(sun.witness == Face{0, 1, 2, 3, 4, 5});

    SquareCondition hex = check_square_condition(cycle_graph(6));
    CHECK(!hex.holds);
    CHECK(hex.witness == Face{0, 2, 4});

    // chordal-like positives
    CHECK(check_square_condition(path_graph(6)).holds);
    CHECK(check_square_condition(complete_graph(4)).holds);
    CHECK(check_square_condition(random_tree(9, 12)).holds);
    CHECK(check_square_condition(cycle_graph(3)).holds);

    // C_7 squared: max cliques are the distance-2 runs, each inside N[mid]
    CHECK(check_square_condition(cycle_graph(7)).holds);
}

TEST_CASE("square equivalence validator") {
    CheckReport pass = validate_square_equivalence(path_graph(5), "path 5");
    CHECK(pass.pass);

    // failing condition makes the implication vacuous, never a failure
    CheckReport vac = validate_square_equivalence(cycle_graph(6), "cycle 6");
    CHECK(vac.pass);
    CHECK(vac.detail.find("vacuous") != std::string::npos);
}

TEST_CASE("table cells route by tier") {
    TableCell exact = validate_table_cell(6, 2);
    CHECK(exact.tier == TableTier::exact);
    CHECK(exact.verified);
    CHECK(exact.predicted.to_string() == "S^2");

    TableCell field = validate_table_cell(6, 2, TableTier::field);
    CHECK(field.tier == TableTier::field);
    CHECK(field.verified);
    CHECK(field.computed.find("Q:") != std::string::npos);
    CHECK(field.computed.find("F2:") != std::string::npos);

    TableCell forced = validate_table_cell(22, 9, TableTier::automatic);
    CHECK(forced.tier == TableTier::field);

    // a complete power routes through the cone shortcut
    TableCell cone = validate_table_cell(8, 4);
    CHECK(cone.verified);
    CHECK(cone.computed.find("cone") != std::string::npos);

    std::vector<TableCell> cells = validate_table(3, 9);
    CHECK(cells.size() == 26); // sum of floor(n/2) + 1 for n = 3..9
    for (const TableCell& c : cells) CHECK(c.verified);

    CHECK_THROWS_AS(validate_table_cell(2, 0), std::invalid_argument);
}

TEST_CASE("cycle independence matches the three-way split") {
    for (int m = 3; m <= 12; ++m) {
        CheckReport r = validate_cycle_independence(m);
        CHECK(r.pass);
    }
    CHECK_THROWS_AS(validate_cycle_independence(2), std::invalid_argument);
}

TEST_CASE("girth collapse validator and its hypotheses") {
    CheckReport c13 = validate_girth_collapse(cycle_graph(13), 4, "cycle 13");
    CHECK(c13.pass);

    CheckReport c7 = validate_girth_collapse(cycle_graph(7), 2, "cycle 7");
    CHECK(c7.pass);

    CheckReport tree = validate_girth_collapse(random_tree(9, 4), 3, "tree");
    CHECK(tree.pass);

    // girth exactly 3r is out of scope
    CHECK_THROWS_AS(validate_girth_collapse(cycle_graph(6), 2, "cycle 6"),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_girth_collapse(cycle_graph(9), 3, "cycle 9"),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_girth_collapse(cycle_graph(13), 0, "cycle 13"),
                    std::invalid_argument);
}

TEST_CASE("girth sharpness: at girth 3r the homotopy type changes") {
    // cl(C_6^2) is a 2-sphere, not the circle cl(C_6) is
    HomologyProfile h6 = integer_homology(clique_complex(power(cycle_graph(6), 2)));
    CHECK(matches_wedge(h6, WedgePrediction::sphere(2)));

    // cl(C_9^3) is a wedge of two 2-spheres
    HomologyProfile h9 = integer_homology(clique_complex(power(cycle_graph(9), 3)));
    CHECK(matches_wedge(h9, WedgePrediction::wedge(2, 2)));
}

TEST_CASE("suspension validators on small circulants") {
    CHECK(validate_suspension_circular(9, 2).pass);
    CHECK(validate_suspension_circular(11, 2).pass);
    CHECK(validate_suspension_circular(8, 1).pass);
    CHECK(validate_suspension_sgraph(9, 2).pass);
    CHECK(validate_suspension_sgraph(11, 2).pass);
    CHECK(validate_suspension_sgraph(15, 4).pass);
    CHECK_THROWS_AS(validate_suspension_sgraph(13, 4), std::invalid_argument);
}

TEST_CASE("star cluster validator") {
    CHECK(validate_star_cluster(circular_complete(9, 2), 0, "circular 9 2").pass);
    CHECK(validate_star_cluster(circular_complete(11, 4), 3, "circular 11 4").pass);
    CHECK(validate_star_cluster(cycle_graph(7), 2, "cycle 7").pass);

    // isolated vertices have no star cluster
    CHECK_THROWS_AS(star_cluster(edgeless_graph(3), 0), std::invalid_argument);
    // a triangle among the neighbors breaks the hypothesis
    CHECK_THROWS_AS(star_cluster(complete_graph(4), 0), std::invalid_argument);
}

TEST_CASE("window validators identify the edge extension") {
    CHECK(validate_window_circular(9, 2).pass);
    CHECK(validate_window_circular(12, 3).pass);
    CHECK(validate_window_sgraph(9, 2).pass);
    CHECK(validate_window_sgraph(12, 3).pass);
    // the identification hits a named small target: half of (14, 3) lands
    // on the 6-vertex circulant with k = 3
    CheckReport r = validate_window_sgraph(14, 3);
    CHECK(r.pass);
}

TEST_CASE("window edge extension rejects bad sequences") {
    Graph g = cycle_graph(6);
    // odd length
    CHECK_THROWS_AS(window_edge_extension(g, std::vector<Vertex>{0, 1, 2}),
                    std::invalid_argument);
    // repeated entry inside a window
    CHECK_THROWS_AS(window_edge_extension(g, std::vector<Vertex>{0, 0, 1, 2}),
                    std::invalid_argument);
    // out of range
    CHECK_THROWS_AS(window_edge_extension(g, std::vector<Vertex>{0, 9, 1, 2}),
                    std::invalid_argument);
}

TEST_CASE("total and line validator on named graphs") {
    CHECK(validate_total_and_line(cycle_graph(5), "cycle 5").pass);
    CHECK(validate_total_and_line(cycle_graph(6), "cycle 6").pass);
    CHECK(validate_total_and_line(complete_graph(4), "complete 4").pass);
    CHECK(validate_total_and_line(three_sun(), "threesun").pass);
    CHECK(validate_total_and_line(path_graph(5), "path 5").pass);
    // disconnected input still checks the total identity
    CHECK(validate_total_and_line(disjoint_union(cycle_graph(3), path_graph(3)),
                                  "triangle+path").pass);
}

TEST_CASE("triangle counts") {
    CHECK(triangle_count(three_sun()) == 4);
    CHECK(triangle_count(complete_graph(4)) == 4);
    CHECK(triangle_count(complete_graph(5)) == 10);
    CHECK(triangle_count(cycle_graph(6)) == 0);
    CHECK(triangle_count(cycle_graph(3)) == 1);
    CHECK(triangle_count(edgeless_graph(5)) == 0);
}

TEST_CASE("universality validator at the smallest endpoint") {
    CheckReport r = validate_universality(SimplicialComplex::simplex_boundary(3), 3, 1,
                                          "triangle-boundary");
    CHECK(r.pass);
    CHECK_THROWS_AS(validate_universality(SimplicialComplex::simplex_boundary(3), 2, 1,
                                          "triangle-boundary"),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_universality(SimplicialComplex::simplex_boundary(3), 3, 2,
                                          "triangle-boundary"),
                    std::invalid_argument);
}

TEST_CASE("distance validator on small bases") {
    CHECK(validate_distance(SimplicialComplex::full_simplex(3), 1, 0, 1, "triangle").pass);
    CHECK(validate_distance(SimplicialComplex::full_simplex(3), 2, 0, 1, "triangle").pass);
    CHECK(validate_distance(SimplicialComplex::simplex_boundary(4), 1, 0, 1,
                            "tetrahedron-boundary").pass);
    CHECK_THROWS_AS(
        validate_distance(SimplicialComplex::full_simplex(3), 1, 0, 0, "triangle"),
        std::invalid_argument);
    // not an edge of the base
    SimplicialComplex two = SimplicialComplex::from_faces(
        6, std::vector<Face>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK_THROWS_AS(validate_distance(two, 1, 0, 3, "two-circles"), std::invalid_argument);
}

TEST_CASE("h1 surjectivity validator") {
    CHECK(validate_h1_surjectivity(cycle_graph(8), 2, "cycle 8").pass);
    CHECK(validate_h1_surjectivity(cycle_graph(7), 3, "cycle 7").pass);
    CHECK(validate_h1_surjectivity(complete_graph(4), 2, "complete 4").pass);
    CHECK_THROWS_AS(validate_h1_surjectivity(cycle_graph(5), 0, "cycle 5"),
                    std::invalid_argument);
}

TEST_CASE("subdivision balls cover the graph with tame overlaps") {
    // the closed 2^s-balls around the three corner images of a subdivided
    // triangle: they cover, each piece folds away, and so does every
    // pairwise overlap, matching the nerve of a triangle
    SimplicialComplex d2 = SimplicialComplex::full_simplex(3);
    SubdividedSkeleton s = subdivided_skeleton(d2, 3);
    Graph p = power(s.graph, 1);

    std::vector<BallAndSphere> balls;
    for (Vertex v = 0; v < 3; ++v) balls.push_back(balls_and_spheres(s, v));

    std::set<Vertex> covered;
    for (const BallAndSphere& b : balls) covered.insert(b.ball.begin(), b.ball.end());
    CHECK(static_cast<int>(covered.size()) == s.graph.vertex_count());

    for (int a = 0; a < 3; ++a) {
        CHECK(dismantle(induced(p, balls[a].ball).graph).has_value());
        for (int b = a + 1; b < 3; ++b) {
            std::vector<Vertex> inter;
            std::set_intersection(balls[a].ball.begin(), balls[a].ball.end(),
                                  balls[b].ball.begin(), balls[b].ball.end(),
                                  std::back_inserter(inter));
            CHECK(!inter.empty()); // every pair of triangle corners shares a side
            CHECK(dismantle(induced(p, inter).graph).has_value());
        }
    }
}

TEST_CASE("table cell reports carry readable identities") {
    CheckReport r = table_cell_report(validate_table_cell(7, 2));
    CHECK(r.pass);
    CHECK(r.id == "table");
    CHECK(r.instance.find("n=7") != std::string::npos);
    CHECK(r.instance.find("r=2") != std::string::npos);
    CHECK(r.detail.find("S^1") != std::string::npos);
}
