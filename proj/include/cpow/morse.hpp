#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cpow/complex.hpp"
#include "cpow/graph.hpp"

namespace cpw {

// A set of face pairs (sigma, tau) on some host complex, each sigma meant
// to be a codimension-1 face of tau and no face repeated across pairs.
// Construction does not validate; verify_matching does.
struct Matching {
    std::vector<std::pair<Face, Face>> pairs;
};

// Result of checking a matching: shape (codimension-1 pairing), face
// disjointness, and acyclicity of the directed path relation
// sigma_0, tau_0, sigma_1, tau_1, ... where (sigma_i, tau_i) are pairs and
// sigma_{i+1} is a facet of tau_i distinct from sigma_i.  On an acyclicity
// failure `cycle` spells out such a closed path, alternating sigma, tau and
// ending where it started.
struct MatchingCheck {
    bool ok = true;
    std::string message;
    std::vector<Face> cycle;
};

// Validates m against k.  A pair face that is not a face of k at all is a
// caller error and throws std::invalid_argument; every other defect comes
// back as a failed check.
MatchingCheck verify_matching(const SimplicialComplex& k, const Matching& m);

// Faces of k in no pair of m, in canonical (dimension, lex) order, the
// empty face first.  Throws std::invalid_argument unless m verifies.
std::vector<Face> critical_faces(const SimplicialComplex& k, const Matching& m);

// Every face of a complex in the same canonical order, empty face included.
std::vector<Face> all_faces(const SimplicialComplex& k);

// Greedy simplicial collapse from k toward the subcomplex l: repeatedly
// removes a pair (f, g) where f is not in l and g is the only face of the
// current complex properly containing f.  `collapsed` reports whether the
// complex shrank exactly to l; `steps` lists the removed pairs in order.
// The greedy strategy can miss a collapse that a cleverer order would find,
// so `collapsed == false` is "not found", not "impossible".
struct CollapseResult {
    bool collapsed = false;
    std::vector<std::pair<Face, Face>> steps;
};
CollapseResult elementary_collapse(const SimplicialComplex& k, const SimplicialComplex& l);

// The matching that collapses cl(g^k) onto cl(g^{k-1}) when every cycle of
// g is longer than 3k.  Faces spanning some pair at graph distance exactly
// k partition by the unique maximal clique of g^k containing them; inside
// the clique, whose induced subgraph of g is a tree, each such face is
// paired with its symmetric difference with the tree center.  Requires
// k >= 2 and girth > 3k (forests qualify); throws std::invalid_argument
// otherwise, std::logic_error if the structural claims above fail, and
// face_limit_error when a maximal clique is too large to enumerate.
Matching girth_matching(const Graph& g, int k);

} // namespace cpw
