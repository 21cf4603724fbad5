#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpow/complex.hpp"
#include "cpow/snf.hpp"

namespace cpw {

// Boundary operator of the d-faces with the usual alternating signs on
// sorted vertex lists: the face dropping position i carries (-1)^i.  Rows
// index (d-1)-faces; for d == 0 there is a single augmentation row (the
// empty face) and every vertex maps to +1.
SparseIntMatrix boundary_matrix(const SimplicialComplex& k, int d);
std::vector<SparseIntMatrix> boundary_matrices(const SimplicialComplex& k);

// Composes consecutive boundary maps and checks they vanish.
bool verify_boundary_squared(const SimplicialComplex& k);

// Reduced integer homology, dimension by dimension.  betti[d] and
// torsion[d] describe H~_d; torsion lists the invariant factors > 1 in
// divisibility order.  The (-1)-dimensional rank gets its own field: it is
// 1 exactly for the empty complex {emptyset} and 0 otherwise.
struct HomologyProfile {
    std::int64_t betti_minus_one = 0;
    std::vector<std::int64_t> betti;
    std::vector<std::vector<long long>> torsion;

    // Drops trailing zero ranks / empty torsion lists.
    void normalize();
    bool trivial() const; // all ranks zero, no torsion
    // Shift a profile one dimension up, as a suspension does.
    HomologyProfile suspended() const;
    std::string to_string() const;
};
bool equal_profiles(HomologyProfile a, HomologyProfile b);

struct HomologyOptions {
    std::int64_t max_faces = kDefaultFaceLimit;
    bool verify_d_squared = false;
};

HomologyProfile integer_homology(const SimplicialComplex& k, const HomologyOptions& opt = {});

// Reduced Betti numbers over a field: the rationals (betti_rational) or a
// small prime field.
struct FieldBetti {
    std::int64_t betti_minus_one = 0;
    std::vector<std::int64_t> betti;
    void normalize();
};
FieldBetti betti_mod_p(const SimplicialComplex& k, unsigned p);
FieldBetti betti_rational(const SimplicialComplex& k);

bool equal_field_betti(FieldBetti a, FieldBetti b);
// The field Betti numbers an integer profile implies over the rationals.
FieldBetti rational_shadow(const HomologyProfile& p);

// A finite wedge of spheres (or the contractible prediction when empty).
// Summands are (dimension, count) with count >= 1, dimensions strictly
// increasing.
struct WedgePrediction {
    std::vector<std::pair<int, std::int64_t>> spheres;

    static WedgePrediction contractible() { return {}; }
    static WedgePrediction sphere(int d) { return wedge(d, 1); }
    static WedgePrediction wedge(int d, std::int64_t count);

    bool is_contractible() const { return spheres.empty(); }
    HomologyProfile profile() const;
    WedgePrediction suspended() const; // every sphere one dimension up
    std::string to_string() const;     // "*", "S^3", "v^4 S^2", ...
    bool operator==(const WedgePrediction&) const = default;
};

// Does the computed profile match the wedge exactly (all Betti numbers,
// no torsion anywhere)?
bool matches_wedge(const HomologyProfile& profile, const WedgePrediction& w);

// Reduced Betti numbers of the clique complex of g over the rationals and
// over F_p, computed factor by factor: if the complement of g is
// disconnected, the clique complex is the join of the clique complexes of
// the complement-components' induced subgraphs, and field Betti numbers of
// a join convolve.
struct FieldBettiPair {
    FieldBetti rational;
    FieldBetti mod_p;
    unsigned p = 2;
    bool agree() const;
};
FieldBettiPair clique_field_betti(const Graph& g, unsigned p = 2,
                                  std::int64_t max_faces = kDefaultFaceLimit);

// Is H_1(sub; F) -> H_1(full; F) onto, over Q and F_2, F_3, F_5?  `sub`
// must be a subcomplex of `full` on the same ambient vertex set (throws
// std::invalid_argument otherwise).
struct H1SurjectivityResult {
    bool rational = false;
    bool mod2 = false;
    bool mod3 = false;
    bool mod5 = false;
    bool all() const { return rational && mod2 && mod3 && mod5; }
};
H1SurjectivityResult h1_inclusion_surjective(const SimplicialComplex& sub,
                                             const SimplicialComplex& full);

} // namespace cpw
