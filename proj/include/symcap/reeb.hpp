#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcap/domain.hpp"
#include "symcap/geometry.hpp"

namespace symcap {

// Reeb dynamics on the boundary of a star-shaped toric domain X_Omega, read
// off combinatorially from the moment polygon. Simple closed orbits come in
// three kinds:
//
//  axis_1        the circle in the z1 plane over the endpoint (A,0)
//  axis_2        the circle in the z2 plane over the endpoint (0,B)
//  torus_family  an S^1 family of orbits over each edge of the upper
//                boundary chain, one family per primitive outward normal
//
// For a torus family over an edge with primitive outward normal nu, every
// orbit in the family has the same action mu . nu (the edge offset) and the
// same rotation number nu_1 + nu_2. For the axis orbits the action is the
// endpoint coordinate (A resp. B) and the rotation number is determined by
// the slope of the incident chain edge: 1 - dx/dy at (A,0) and 1 - dy/dx at
// (0,B). A vertical (resp. horizontal) incident edge gives rotation number
// exactly 1.

enum class OrbitKind { Axis1, Axis2, TorusFamily };

std::string to_string(OrbitKind kind);

struct ReebOrbitInfo {
    OrbitKind kind;
    // Axis orbits: the endpoint (A,0) or (0,B). Torus families: the midpoint
    // of the supporting edge (the action is constant along the edge, so any
    // point of the edge represents the family).
    Point2 location;
    // Primitive outward normal of the supporting edge; torus families only.
    std::optional<IntVec2> normal;
    Rational action;
    Rational rotation_number;
};

// All simple orbit records with action <= action_cap, in boundary order:
// axis_1, axis_2, then one torus family per chain edge. Requires a
// star-shaped profile (every orbit of a star-shaped domain has positive
// action; without star-shapedness the combinatorial picture breaks down).
std::vector<ReebOrbitInfo> enumerate_orbits(const MomentPolygon& omega,
                                            const Rational& action_cap);

// Minimal action over all simple closed orbits: min(A, B, edge offsets).
Rational a_min(const MomentPolygon& omega);

struct DynConvexVerdict {
    bool dynamically_convex = false;
    // When not dynamically convex: a simple orbit with rotation number <= 1.
    // The witness can live over an edge, over an axis endpoint, or over a
    // convex corner of the chain whose outward normal cone contains (1,0) or
    // (0,1) (such a corner carries a rotation-number-1 family after any
    // smoothing of the boundary).
    std::optional<ReebOrbitInfo> witness;
};

// A star-shaped toric domain is dynamically convex iff its profile is
// strictly monotone: every chain edge points strictly down and to the right.
// Then every simple orbit has rotation number > 1 (edges give
// nu_1 + nu_2 >= 2, the axis orbits give 1 - dx/dy > 1 and 1 - dy/dx > 1).
// Otherwise some orbit has rotation number <= 1 and a witness is returned.
DynConvexVerdict is_dynamically_convex(const MomentPolygon& omega);

}  // namespace symcap
