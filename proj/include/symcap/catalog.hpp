#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symcap/domain.hpp"

namespace symcap {

// The pinched-square family: convex polygon with corners (0,0), (1-2a,0),
// (1-a,a), (a,1-a), (0,1-2a). Weakly convex, never monotone.
MomentPolygon make_Xa(const Rational& a);

// Recognize a (possibly scaled) member of the X_a family; returns (a, scale).
std::optional<std::pair<Rational, Rational>> detect_Xa(const MomentPolygon& omega);

MomentPolygon make_ellipsoid(const Rational& a, const Rational& b);
MomentPolygon make_polydisk(const Rational& a, const Rational& b);
MomentPolygon make_simplex(const Rational& r);

// Truncated L-shape with the default bounding box of side 2 * sum(a).
LShape make_Lshape(std::vector<Rational> a);

// Inscribed rational polygon for the positive-quadrant L^p unit ball
// {x^p + y^p <= 1}. Vertices lie exactly on the curve for p in {1, 2} and
// p = 1/m; otherwise they are certified on-or-inside via root bounds. The
// chain is filtered to the convex (p >= 1) or concave (p < 1) envelope of
// the sampled points so the classification matches the smooth region.
MomentPolygon make_lp_ball(const Rational& p, int samples);

// Seeded deterministic generators for property tests.
MomentPolygon random_monotone_polygon(std::uint64_t seed, int n_vertices);
MomentPolygon random_concave_polygon(std::uint64_t seed, int n_vertices);
MomentPolygon random_weakly_convex_polygon(std::uint64_t seed, int n_vertices);

}  // namespace symcap
