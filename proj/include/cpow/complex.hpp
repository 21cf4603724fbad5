#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpow/graph.hpp"

namespace cpw {

using Face = std::vector<Vertex>; // sorted ascending, no repeats

inline constexpr std::int64_t kDefaultFaceLimit = 10'000'000;

// Abstract simplicial complex on ambient vertex set 0..n-1.  Immutable and
// canonically stored: faces grouped by dimension, each face sorted, faces
// within one dimension in lexicographic order.  A non-void complex always
// contains the empty face; the "void" complex has no faces at all and is
// distinct from the "empty" complex {emptyset}.
class SimplicialComplex {
public:
    // Void complex (no faces, not even the empty one).
    static SimplicialComplex void_complex(int vertex_count = 0);
    // {emptyset}: the complex with the empty face only.
    static SimplicialComplex empty_complex(int vertex_count = 0);
    // Downward closure of `faces` when close_downward, else `faces` must
    // already be closed (verified; throws std::invalid_argument if not).
    // The empty face is implied as soon as any face is present.
    static SimplicialComplex from_faces(int vertex_count, std::span<const Face> faces,
                                        bool close_downward = true);
    static SimplicialComplex full_simplex(int vertex_count);
    // Proper faces of the simplex on `vertex_count` vertices (a sphere of
    // dimension vertex_count - 2).
    static SimplicialComplex simplex_boundary(int vertex_count);

    int vertex_count() const { return n_; }
    bool is_void() const { return !has_empty_face_; }
    // Dimension of the largest face; -1 for {emptyset}; -2 for void.
    int dim() const;
    // Number of nonempty faces.
    std::int64_t face_count() const;
    int level_size(int d) const {
        return d < 0 || d >= static_cast<int>(levels_.size())
                   ? 0
                   : static_cast<int>(levels_[d].size() / (d + 1));
    }
    // i-th d-face in lexicographic order.
    std::span<const Vertex> face(int d, int i) const {
        return {levels_[d].data() + static_cast<std::size_t>(i) * (d + 1),
                static_cast<std::size_t>(d + 1)};
    }
    bool contains(std::span<const Vertex> f) const;
    // Lexicographic position of f among the d-faces (d = f.size()-1).
    std::optional<int> face_index(std::span<const Vertex> f) const;

    // f[d] = number of d-faces, d = 0..dim; empty vector for void/{emptyset}.
    std::vector<std::int64_t> f_vector() const;
    std::int64_t euler_characteristic() const;         // sum (-1)^d f_d
    std::int64_t reduced_euler_characteristic() const; // euler - 1 (void: 0)

    bool operator==(const SimplicialComplex& other) const {
        return n_ == other.n_ && has_empty_face_ == other.has_empty_face_ &&
               levels_ == other.levels_;
    }

private:
    // Installs levels that are already canonical (used by builders that
    // enumerate faces in order); falls back to sorting if they are not.
    static SimplicialComplex adopt_levels(int vertex_count,
                                          std::vector<std::vector<Vertex>> levels);
    friend SimplicialComplex clique_complex(const Graph&, std::optional<int>, std::int64_t);

    int n_ = 0;
    bool has_empty_face_ = false;
    std::vector<std::vector<Vertex>> levels_; // levels_[d]: flat, stride d+1
};

// All cliques of g (the flag complex).  dim_cap keeps only faces of
// dimension <= dim_cap.  Throws face_limit_error beyond max_faces.
SimplicialComplex clique_complex(const Graph& g, std::optional<int> dim_cap = std::nullopt,
                                 std::int64_t max_faces = kDefaultFaceLimit);

// Independent sets of g == clique complex of the complement.
SimplicialComplex independence_complex(const Graph& g, std::optional<int> dim_cap = std::nullopt,
                                       std::int64_t max_faces = kDefaultFaceLimit);

// Faces of dimension <= n.
SimplicialComplex skeleton(const SimplicialComplex& k, int n);

// Join: all unions of a face of a with a face of b, b's vertices shifted
// past a's.  join(void, x) is void; join({emptyset}, x) is a shifted copy
// of x.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
// Join with one new vertex (the apex, last index).
SimplicialComplex cone(const SimplicialComplex& k);
// Join with two new vertices (the poles, last two indices).
SimplicialComplex suspension(const SimplicialComplex& k);

// star(k, v) = {f : f + {v} in k}, link(k, v) = {f in star : v not in f};
// both live on the ambient vertex set of k.
SimplicialComplex star(const SimplicialComplex& k, Vertex v);
SimplicialComplex link(const SimplicialComplex& k, Vertex v);

// Barycentric subdivision: one vertex per nonempty face of k (in canonical
// face order), one face per chain of faces strictly ordered by inclusion.
// vertex_labels[i] is the face of k the i-th new vertex stands for.
struct VertexLabelledComplex {
    SimplicialComplex complex;
    std::vector<Face> vertex_labels;
};
VertexLabelledComplex barycentric_subdivision(const SimplicialComplex& k,
                                              std::int64_t max_faces = kDefaultFaceLimit);

// Faces of k contained in `selected`, reindexed along sorted(selected);
// original[i] maps back.  Empty selection gives the empty complex.
struct InducedComplex {
    SimplicialComplex complex;
    std::vector<Vertex> original;
};
InducedComplex induced_subcomplex(const SimplicialComplex& k, std::span<const Vertex> selected);

// Graph with an edge per 1-face.
Graph one_skeleton_graph(const SimplicialComplex& k);

// Inclusion-maximal faces, in (dimension, lex) order.  Void: empty list;
// {emptyset}: the empty face alone.
std::vector<Face> facets(const SimplicialComplex& k);

// Maximal cliques of g (Bron-Kerbosch with pivoting), deterministic order.
std::vector<Face> maximal_cliques(const Graph& g);

} // namespace cpw
