#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cpow/complex.hpp"
#include "cpow/families.hpp"
#include "cpow/graph.hpp"
#include "cpow/homology.hpp"

namespace cpw {

// ---------------------------------------------------------------------------
// Closed-form predictions
// ---------------------------------------------------------------------------

// Homotopy type of the clique complex of the r-th power of an n-cycle:
// contractible once 2r >= n; otherwise, with l = floor(r / (n-2r)),
// a wedge of n-2r-1 spheres S^{2l} when r(2l+1) = ln and S^{2l+1} when r
// falls strictly inside the band.  Integer arithmetic throughout.
// Throws std::invalid_argument unless n >= 3 and r >= 0.
WedgePrediction predict_clique_cycle_power(int n, int r);

// Homotopy type of the independence complex of circular_complete(n, k),
// k >= 0 (k = 0 reads as the complete power, predicting contractible):
// with r = (n-k-1)/2 and l = floor(r / (k+1)), a wedge of k spheres S^{2l}
// when (k+1) divides r and S^{2l+1} otherwise.  Throws std::invalid_argument
// on a parity violation or parameters outside 0 <= k <= n-1, n >= 2.
WedgePrediction predict_ind_circular(int n, int k);

// ---------------------------------------------------------------------------
// Structural constructions
// ---------------------------------------------------------------------------

// Is every maximal clique of g^2 contained in some closed neighborhood
// N_g[v]?  When not, `witness` is the first maximal clique (in the
// deterministic enumeration order) that no closed neighborhood covers.
struct SquareCondition {
    bool holds = true;
    Face witness;
};
SquareCondition check_square_condition(const Graph& g);

// Subcomplex of the independence complex of g spanned by the faces that
// avoid N[v] entirely and miss the neighborhood of at least one neighbor
// of v: the intersection of the star of v with the union of the stars of
// its neighbors.  Lives on the ambient vertex set of g; never contains v.
// Requires v non-isolated and in no triangle of g (std::invalid_argument).
SimplicialComplex star_cluster(const Graph& g, Vertex v,
                               std::int64_t max_faces = kDefaultFaceLimit);

// Given a sequence v_1..v_{2d} of vertices in which every d+1 consecutive
// entries are pairwise distinct, `extended` is g plus the edges (v_i, v_j)
// for 1 <= i <= d < j <= 2d with j - i <= d, and `window_complex` is the
// subcomplex of the independence complex of g whose faces are disjoint
// from {v_s, .., v_{s+d-1}} for some 1 <= s <= d+1.  `faces_equal` reports
// whether window_complex coincides with the independence complex of
// `extended` (the point of the construction).  Throws std::invalid_argument
// on an odd-length sequence, out-of-range vertices, or a repeat inside a
// window of d+1 consecutive entries.
struct WindowExtension {
    Graph extended;
    SimplicialComplex window_complex;
    bool faces_equal = false;
    std::int64_t window_face_count = 0;
};
WindowExtension window_edge_extension(const Graph& g, std::span<const Vertex> seq,
                                      std::int64_t max_faces = kDefaultFaceLimit);

std::int64_t triangle_count(const Graph& g);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

// One validated claim: a stable identifier, the instance it ran on, the
// verdict, and enough computed evidence to audit a failure.
struct CheckReport {
    std::string id;
    std::string instance;
    bool pass = false;
    std::string detail;
};

// How a table cell was verified: exact integer homology, or field Betti
// numbers (rationals and mod 2) against the predicted profile.  `automatic`
// picks exact for n <= 20 and field beyond.
enum class TableTier { automatic, exact, field };

struct TableCell {
    int n = 0;
    int r = 0;
    WedgePrediction predicted;
    TableTier tier = TableTier::exact; // tier actually used, never automatic
    bool verified = false;
    std::string computed;
};

// ---------------------------------------------------------------------------
// Validators, one per claim
// ---------------------------------------------------------------------------

// Homotopy-type table for cl(C_n^r): predict, compute, compare.
TableCell validate_table_cell(int n, int r, TableTier tier = TableTier::automatic,
                              std::int64_t max_faces = kDefaultFaceLimit);
std::vector<TableCell> validate_table(int n_min, int n_max,
                                      TableTier tier = TableTier::automatic,
                                      std::int64_t max_faces = kDefaultFaceLimit);
CheckReport table_cell_report(const TableCell& cell);

// Independence complex of an m-cycle: wedge of two S^{m/3-1} when 3 | m,
// S^{(m-1)/3-1} when m = 1 mod 3, S^{(m-2)/3} when m = 2 mod 3.
CheckReport validate_cycle_independence(int m);

// For 2 <= k <= r: the distance-k matching on cl(g^k) verifies, its
// critical faces are exactly cl(g^{k-1}), and the greedy collapse reaches
// cl(g^{k-1}).  Requires r >= 1 and girth(g) > 3r.
CheckReport validate_girth_collapse(const Graph& g, int r, const std::string& name,
                                    std::int64_t max_faces = kDefaultFaceLimit);

// ind(circular_complete(n, k)) has the homology of the suspension of
// ind(s_graph(n, k)); needs n >= 3k - 1 (and n >= k + 3 for the s-graph).
CheckReport validate_suspension_circular(int n, int k,
                                         std::int64_t max_faces = kDefaultFaceLimit);

// ind(s_graph(n, k)) has the homology of the suspension of
// ind(circular_complete(n - 2(k+1), k)); needs n >= 3k + 3.
CheckReport validate_suspension_sgraph(int n, int k,
                                       std::int64_t max_faces = kDefaultFaceLimit);

// Star-cluster suspension: ind(g) has the homology of the suspension of
// star_cluster(g, v).
CheckReport validate_star_cluster(const Graph& g, Vertex v, const std::string& name,
                                  std::int64_t max_faces = kDefaultFaceLimit);

// The window construction inside circular_complete(n, k) at vertex 0:
// the extended graph is the s-graph, the window complex is the star
// cluster, and the face identity holds.
CheckReport validate_window_circular(int n, int k,
                                     std::int64_t max_faces = kDefaultFaceLimit);

// The window construction inside s_graph(n, k) at the vertex labeled -1:
// the extended graph is circular_complete(n - 2(k+1), k) after the cyclic
// relabeling, the window complex is the star cluster, and the face
// identity holds.  Needs n >= 3k + 3.
CheckReport validate_window_sgraph(int n, int k,
                                   std::int64_t max_faces = kDefaultFaceLimit);

// When every maximal clique of g^2 sits in a closed neighborhood, cl(g)
// and cl(g^2) have equal homology; vacuous pass (with the witness
// recorded) when the condition fails.
CheckReport validate_square_equivalence(const Graph& g, const std::string& name,
                                        std::int64_t max_faces = kDefaultFaceLimit);

// cl of the total graph has the homology of cl(g) with one extra rank-2
// class per triangle of g; for connected g with an edge, cl of the line
// graph has the homology of the 2-skeleton of cl(g).
CheckReport validate_total_and_line(const Graph& g, const std::string& name,
                                    std::int64_t max_faces = kDefaultFaceLimit);

// cl((G_s)^r) has the homology of the base complex, where G_s is the
// 1-skeleton of the s-fold barycentric subdivision; needs 1 <= r < 2^{s-2}.
CheckReport validate_universality(const SimplicialComplex& base, int s, int r,
                                  const std::string& name,
                                  std::int64_t max_faces = kDefaultFaceLimit);

// Inside the subdivision 1-skeleton, the hop distance between
// (open ball at u) ∩ (sphere at v) and (sphere at u) ∩ (open ball at v),
// measured in the subgraph induced on the union of the open balls, equals
// the subdivision scale 2^s.  Requires {u, v} to be an edge of the base.
CheckReport validate_distance(const SimplicialComplex& base, int s, Vertex u, Vertex v,
                              const std::string& name,
                              std::int64_t max_faces = kDefaultFaceLimit);

// The inclusion cl(g) -> cl(g^r) is onto in rank-1 homology over the
// rationals and F_2, F_3, F_5.  Requires r >= 1.
CheckReport validate_h1_surjectivity(const Graph& g, int r, const std::string& name,
                                     std::int64_t max_faces = kDefaultFaceLimit);

// Pure arithmetic consistency of the two prediction formulas: the cycle
// side matches the circulant side under k = n - 2r - 1, and the
// double-suspension identity relates (n, r) to (4r - n, 3r - n) whenever
// 3r >= n, 2r < n and 4r - n >= 3.  Exhaustive for 3 <= n <= n_max.
CheckReport validate_prediction_consistency(int n_max);

} // namespace cpw
