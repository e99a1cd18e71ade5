#pragma once

#include <vector>

#include "symcap/domain.hpp"

namespace symcap {

// One triangle of the recursive decomposition: the image of the corner
// triangle with legs `size` under `placement`, in the coordinates of the
// domain the expansion started from. depth counts expansion steps from the
// root triangle (0 for the first corner simplex).
struct PlacedTriangle {
    UnimodularAffine placement;
    Rational size;
    int depth = 0;
};

struct WeightSequence {
    std::vector<Rational> weights;          // sorted descending
    std::vector<PlacedTriangle> triangles;  // recursion order
    Rational sum_of_squares() const;
};

// Weight expansion of a concave profile: the largest corner simplex, then
// recursion into the two remaining regions, normalized back to concave
// profiles by unimodular shears. Throws ClassMismatchError on non-concave
// input.
WeightSequence weight_sequence(const MomentPolygon& omega);

struct OuterPiece {
    MomentPolygon profile;         // normalized concave profile of the piece
    UnimodularAffine into_parent;  // piece coordinates -> original coordinates
};

struct OuterDecomposition {
    Rational r;                   // smallest r with Omega inside the simplex of size r
    WeightSequence inner_weights; // union of the piece expansions, triangles in original coords
    std::vector<OuterPiece> pieces;
};

// Decomposition of a weakly convex profile: the smallest enclosing corner
// simplex minus the domain splits into at most two concave pieces.
OuterDecomposition outer_decomposition(const MomentPolygon& omega);

}  // namespace symcap
