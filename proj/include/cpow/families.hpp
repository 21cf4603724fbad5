#pragma once

#include <cstdint>
#include <vector>

#include "cpow/complex.hpp"
#include "cpow/graph.hpp"

namespace cpw {

Graph cycle_graph(int n);    // n >= 3
Graph path_graph(int n);     // n >= 1 vertices, n-1 edges
Graph complete_graph(int n); // n >= 0

// Circulant family on n vertices where i is adjacent to i+r+1 ... i+r+k
// (mod n), with r = (n-k-1)/2.  Requires n >= 2, 1 <= k <= n-1, and n, k of
// opposite parity so r is an integer.  k-regular; k == n-1 gives the
// complete graph.
struct CircularParams {
    int n;
    int k;
    int r() const { return (n - k - 1) / 2; }
};
Graph circular_complete(int n, int k);

// Induced subgraph of circular_complete(n, k) on the 2r vertices labeled
// -r..-1, 1..r (vertex j carries label j - r for j < r, j - r + 1
// otherwise), plus the edges {-i, j} with i, j >= 1 and i + j <= k.
struct SGraph {
    Graph graph;
    std::vector<int> label; // signed label per vertex
    int n;
    int k;
};
SGraph s_graph(int n, int k);

// Triangle 0,1,2 with a pendant-triangle tip for each triangle edge: tip
// 3+i is adjacent to the two triangle vertices other than i.
Graph three_sun();

// Subdivision: one new vertex per edge, placed after the original
// vertices in canonical edge order.  edge_vertex[i] is the edge of g that
// vertex original_count + i represents.
struct SubdividedGraph {
    Graph graph;
    int original_count;
    std::vector<Edge> edge_vertex;
};
SubdividedGraph subdivision(const Graph& g);

// Total graph: square of the subdivision (same vertex order).
SubdividedGraph total_graph(const Graph& g);

// Line graph on the canonical edge order of g; built both from edge
// incidence and as the induced subgraph of the total graph on the edge
// vertices, which must agree.  Throws std::invalid_argument when g has no
// edges.
Graph line_graph(const Graph& g);

// Kneser-type graph: vertices are the n-subsets of {1..2n+k} with no two
// elements cyclically adjacent, edges join disjoint sets.  Vertex order is
// lexicographic on the sets.
struct StableKneser {
    Graph graph;
    std::vector<std::vector<int>> sets;
};
StableKneser stable_kneser(int n, int k);

// s-fold barycentric subdivision of k, tracked down to the 1-skeleton.
// base_location[v] is the subdivision vertex sitting at original vertex v;
// carrier[x] is the face of the base complex whose interior (or boundary
// vertex) the subdivision vertex x lies in.
struct SubdividedSkeleton {
    Graph graph;
    int steps = 0;
    std::vector<Vertex> base_location;
    std::vector<Face> carrier;
};
SubdividedSkeleton subdivided_skeleton(const SimplicialComplex& k, int steps,
                                       std::int64_t max_faces = kDefaultFaceLimit);

// Vertices at hop distance <= 2^steps (ball) and == 2^steps (sphere) from
// the subdivision vertex at base vertex v, ascending.
struct BallAndSphere {
    std::vector<Vertex> ball;
    std::vector<Vertex> sphere;
};
BallAndSphere balls_and_spheres(const SubdividedSkeleton& s, Vertex base_v);

// Seeded Erdos-Renyi graph: each pair independently with probability p.
// Determinism contract: the 64-bit Mersenne Twister drives every draw, an
// edge appears iff (draw >> 11) < p * 2^53, pairs in (u, v) lexicographic
// order; no library distribution objects are involved.
Graph random_graph(int n, double p, std::uint64_t seed);

// Seeded uniform labeled tree by decoding a random Prufer sequence drawn
// from the same engine (values rng() % n).
Graph random_tree(int n, std::uint64_t seed);

} // namespace cpw
