#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "cpow/complex.hpp"
#include "cpow/families.hpp"
#include "cpow/graph.hpp"

using namespace cpw;

namespace {

bool is_single_cycle(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

} // namespace

TEST_CASE("basic families have the right shape") {
    Graph c7 = cycle_graph(7);
    CHECK(c7.vertex_count() == 7);
    CHECK(c7.edge_count() == 7);
    CHECK(is_single_cycle(c7));
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);

    Graph p1 = path_graph(1);
    CHECK(p1.vertex_count() == 1);
    CHECK(p1.edge_count() == 0);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);

    CHECK(complete_graph(0).vertex_count() == 0);
    CHECK(complete_graph(5).edge_count() == 10);
}

TEST_CASE("circular complete graphs complement cycle powers") {
    // the defining identity: the complement of C_n^r on offsets r+1..r+k
    for (int n = 3; n <= 40; n += 3)
        for (int r = 0; 2 * r + 1 < n; ++r) {
            int k = n - 2 * r - 1;
            if (k < 1) continue;
            CHECK(circular_complete(n, k) == complement(power(cycle_graph(n), r)));
        }

    CHECK_THROWS_AS(circular_complete(8, 4), std::invalid_argument); // n - k - 1 odd
    CHECK_THROWS_AS(circular_complete(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(circular_complete(5, 5), std::invalid_argument);

    CircularParams p{11, 4};
    CHECK(p.r() == 3);
}

TEST_CASE("circular complete degree and edge counts") {
    // offsets r+1 .. n-r-1 are closed under negation mod n, so the graph is
    // k-regular
    Graph g = circular_complete(11, 4); // r = 3, circular distances 4..7
    CHECK(g.vertex_count() == 11);
    for (Vertex v = 0; v < 11; ++v) CHECK(g.degree(v) == 4);
    CHECK(g.edge_count() == 22);
    CHECK(g.adjacent(0, 4));
    CHECK(g.adjacent(0, 7));
    CHECK(!g.adjacent(0, 3));
    CHECK(!g.adjacent(0, 8));
}

TEST_CASE("the half graph of a circulant") {
    SGraph s = s_graph(9, 2);
    CHECK(s.n == 9);
    CHECK(s.k == 2);
    CHECK(s.graph.vertex_count() == 6); // 2r with r = 3
    REQUIRE(s.label.size() == 6);
    CHECK(s.label == std::vector<int>{-3, -2, -1, 1, 2, 3});

    // edges inside the circulant plus the short-label bridges
    Graph c = circular_complete(9, 2);
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            int la = s.label[a], lb = s.label[b];
            int ca = ((la % 9) + 9) % 9, cb = ((lb % 9) + 9) % 9;
            bool expect = c.adjacent(ca, cb) ||
                          (la < 0 && lb > 0 && -la + lb <= 2) ||
                          (lb < 0 && la > 0 && -lb + la <= 2);
            CHECK(s.graph.adjacent(a, b) == expect);
        }

    // with k = 2 the half graph of an odd circulant is a shorter cycle
    for (int n = 7; n <= 15; n += 2) {
        Graph h = s_graph(n, 2).graph;
        CHECK(h.vertex_count() == n - 3);
        CHECK(is_single_cycle(h));
    }

    CHECK_THROWS_AS(s_graph(4, 2), std::invalid_argument);
}

TEST_CASE("three-sun structure") {
    Graph s = three_sun();
    CHECK(s.vertex_count() == 6);
    CHECK(s.edge_count() == 9);
    CHECK(girth(s) == 3);
    // triangle vertices have degree 4, tips degree 2
    std::vector<int> degs;
    for (Vertex v = 0; v < 6; ++v) degs.push_back(s.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{2, 2, 2, 4, 4, 4});
    // tips form an independent set
    CHECK(!s.adjacent(3, 4));
    CHECK(!s.adjacent(3, 5));
    CHECK(!s.adjacent(4, 5));
}

TEST_CASE("subdivision splits every edge once") {
    Graph k3 = complete_graph(3);
    SubdividedGraph sd = subdivision(k3);
    CHECK(sd.original_count == 3);
    CHECK(sd.graph.vertex_count() == 6);
    CHECK(sd.graph.edge_count() == 6);
    CHECK(is_single_cycle(sd.graph)); // subdividing a triangle gives a hexagon
    REQUIRE(sd.edge_vertex.size() == 3);
    CHECK(sd.edge_vertex == k3.edges());
    // each edge vertex joins exactly its two endpoints
    for (std::size_t i = 0; i < sd.edge_vertex.size(); ++i) {
        Vertex ev = 3 + static_cast<Vertex>(i);
        CHECK(sd.graph.degree(ev) == 2);
        CHECK(sd.graph.adjacent(ev, sd.edge_vertex[i].first));
        CHECK(sd.graph.adjacent(ev, sd.edge_vertex[i].second));
    }

    // original vertices never become adjacent
    Graph c5sd = subdivision(cycle_graph(5)).graph;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) CHECK(!c5sd.adjacent(a, b));
}

TEST_CASE("total graph is the square of the subdivision") {
    for (std::uint64_t seed : {61, 62}) {
        Graph g = random_graph(7, 0.4, seed);
        SubdividedGraph t = total_graph(g);
        CHECK(t.graph == power(subdivision(g).graph, 2));
        CHECK(t.original_count == 7);
        CHECK(t.edge_vertex == g.edges());
    }
}

TEST_CASE("line graphs of standard graphs") {
    // line graph of a cycle is again a cycle (vertex order follows the
    // canonical edge order, so compare shape, not labels)
    Graph lc5 = line_graph(cycle_graph(5));
    CHECK(lc5.vertex_count() == 5);
    CHECK(is_single_cycle(lc5));
    CHECK(line_graph(complete_graph(3)) == complete_graph(3));
    CHECK(line_graph(path_graph(4)) == path_graph(3));

    // star: all edges share the hub
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(line_graph(star) == complete_graph(3));

    CHECK_THROWS_AS(line_graph(edgeless_graph(3)), std::invalid_argument);

    // independent re-derivation: edges adjacent iff they share an endpoint
    Graph g = random_graph(7, 0.5, 63);
    Graph lg = line_graph(g);
    auto& edges = g.edges();
    REQUIRE(lg.vertex_count() == static_cast<int>(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            bool share = edges[i].first == edges[j].first || edges[i].first == edges[j].second ||
                         edges[i].second == edges[j].first || edges[i].second == edges[j].second;
            CHECK(lg.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) == share);
        }
}

TEST_CASE("stable Kneser graphs") {
    // one-element subsets: no stability constraint binds, disjoint = distinct
    CHECK(stable_kneser(1, 2).graph == complete_graph(4));
    CHECK(stable_kneser(1, 3).graph == complete_graph(5));

    // 2-subsets of a 5-cycle ground set: the 5 stable pairs form a 5-cycle
    StableKneser sk = stable_kneser(2, 1);
    CHECK(sk.graph.vertex_count() == 5);
    CHECK(is_single_cycle(sk.graph));

    // structural contract: sets are stable, edges mean disjoint
    StableKneser big = stable_kneser(3, 2);
    int ground = 2 * 3 + 2;
    for (const auto& s : big.sets) {
        REQUIRE(s.size() == 3);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                int diff = (s[j] - s[i]) % ground;
                CHECK(diff != 1);
                CHECK(diff != ground - 1);
            }
    }
    for (int a = 0; a < big.graph.vertex_count(); ++a)
        for (int b = a + 1; b < big.graph.vertex_count(); ++b) {
            std::set<int> inter;
            for (int x : big.sets[a])
                if (std::count(big.sets[b].begin(), big.sets[b].end(), x)) inter.insert(x);
            CHECK(big.graph.adjacent(a, b) == inter.empty());
        }
}

TEST_CASE("subdivided skeletons track carriers") {
    SimplicialComplex d2 = SimplicialComplex::full_simplex(3);

    SubdividedSkeleton s0 = subdivided_skeleton(d2, 0);
    CHECK(s0.steps == 0);
    CHECK(s0.graph == complete_graph(3)); // 1-skeleton of the triangle

    SubdividedSkeleton s1 = subdivided_skeleton(d2, 1);
    CHECK(s1.graph.vertex_count() == 7);
    CHECK(s1.graph.edge_count() == 12);

    SubdividedSkeleton s3 = subdivided_skeleton(d2, 3);
    CHECK(s3.graph.vertex_count() == 121);
    CHECK(s3.graph.edge_count() == 336);

    // base locations sit at the original vertices with singleton carriers
    REQUIRE(s3.base_location.size() == 3);
    for (Vertex v = 0; v < 3; ++v) {
        Vertex loc = s3.base_location[v];
        CHECK(s3.carrier[loc] == Face{v});
    }
    // carriers are faces of the base complex
    for (const Face& c : s3.carrier) CHECK(d2.contains(c));

    SubdividedSkeleton b3 = subdivided_skeleton(SimplicialComplex::simplex_boundary(4), 3);
    CHECK(b3.graph.vertex_count() == 434);
}

TEST_CASE("balls and spheres at powers of two") {
    SubdividedSkeleton s = subdivided_skeleton(SimplicialComplex::full_simplex(3), 2);
    DistanceTable dist = distances(s.graph);
    for (Vertex base = 0; base < 3; ++base) {
        BallAndSphere bs = balls_and_spheres(s, base);
        Vertex center = s.base_location[base];
        CHECK(std::is_sorted(bs.ball.begin(), bs.ball.end()));
        CHECK(std::is_sorted(bs.sphere.begin(), bs.sphere.end()));
        std::set<Vertex> ball(bs.ball.begin(), bs.ball.end());
        for (Vertex v = 0; v < s.graph.vertex_count(); ++v) {
            bool in = dist.within(center, v, 4);
            CHECK(ball.count(v) == static_cast<std::size_t>(in));
        }
        for (Vertex v : bs.sphere) {
            CHECK(dist.dist(center, v) == 4);
            CHECK(ball.count(v) == 1);
        }
    }
}

TEST_CASE("seeded random graphs follow the documented draw") {
    Graph g = random_graph(12, 0.37, 2026);
    CHECK(g == random_graph(12, 0.37, 2026));
    CHECK(!(g == random_graph(12, 0.37, 2027)));

    CHECK(random_graph(9, 0.0, 1).edge_count() == 0);
    CHECK(random_graph(9, 1.0, 1) == complete_graph(9));

    // replicate the contract: one engine draw per pair in (u, v) lex order,
    // an edge iff the top 53 bits fall under p * 2^53
    std::mt19937_64 rng(2026);
    double p = 0.37;
    auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);
    std::vector<Edge> expect;
    for (Vertex u = 0; u < 12; ++u)
        for (Vertex v = u + 1; v < 12; ++v)
            if ((rng() >> 11) < threshold) expect.push_back({u, v});
    CHECK(g == Graph(12, expect));

    CHECK_THROWS_AS(random_graph(5, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_graph(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("seeded random trees are uniform-format trees") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        Graph t = random_tree(8, seed);
        CHECK(t.vertex_count() == 8);
        CHECK(t.edge_count() == 7);
        CHECK(is_connected(t));
        CHECK(!girth(t).has_value());
        CHECK(t == random_tree(8, seed));
    }
    CHECK(random_tree(1, 5).vertex_count() == 1);
    CHECK(random_tree(2, 5).edge_count() == 1);
}
