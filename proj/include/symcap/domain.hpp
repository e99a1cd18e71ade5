#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcap/geometry.hpp"

namespace symcap {

// One edge of the upper boundary chain, walked from the mu2 axis toward the
// mu1 axis, with its primitive outward normal nu and offset nu . a (the value
// of nu . mu on the edge line).
struct Edge {
    Point2 a;
    Point2 b;
    IntVec2 normal;
    Rational offset;
};

// The profile Omega of a toric domain in R^4: the region bounded by the two
// axis segments and a vertex chain from (0,B) to (A,0). The chain must stay
// in the closed quadrant with all interior vertices strictly positive, and
// the closed boundary must be simple. Collinear chain vertices are merged on
// construction.
class MomentPolygon {
  public:
    explicit MomentPolygon(std::vector<Point2> boundary_plus);

    const std::vector<Point2>& chain() const { return chain_; }
    const std::vector<Edge>& edges() const { return edges_; }
    // Full boundary (0,0),(A,0),...,(0,B) in counterclockwise order.
    const std::vector<Point2>& closed_polygon() const { return closed_; }

    Rational A() const { return chain_.back().x; }
    Rational B() const { return chain_.front().y; }
    const Rational& area() const { return area_; }
    // max of mu1 (resp. mu2) over the region.
    const Rational& M1() const { return m1_; }
    const Rational& M2() const { return m2_; }

    bool contains(const Point2& p) const;
    MomentPolygon scaled(const Rational& lambda) const;

    bool operator==(const MomentPolygon& other) const { return chain_ == other.chain_; }

  private:
    std::vector<Point2> chain_;
    std::vector<Edge> edges_;
    std::vector<Point2> closed_;
    Rational area_;
    Rational m1_, m2_;
};

struct DomainClass {
    bool star_shaped = false;
    bool monotone = false;
    bool strictly_monotone = false;
    bool concave = false;
    bool convex_toric = false;
    bool weakly_convex = false;
    bool convex_in_R4 = false;

    std::vector<std::string> flag_names() const;
    bool operator==(const DomainClass&) const = default;
};

DomainClass classify(const MomentPolygon& omega);

// Convexity of the four-dimensional domain itself: the region
// {(x,y) : (x^2, y^2) in Omega} is convex exactly when Omega is convex and
// every chain normal is componentwise nonnegative. Mixed-sign normals give
// hyperbolic boundary arcs, and chain corners that turn away from the origin
// lift to reflex corners.
bool is_convex_in_R4(const MomentPolygon& omega);

Rational volume(const MomentPolygon& omega);

// Membership in the lifted region {(x,y) : (x^2, y^2) in Omega}.
bool lift_contains(const MomentPolygon& omega, const Point2& p);

// Randomized midpoint-convexity refutation for the lift: searches pairs of
// rational points inside the lift whose midpoint falls outside. Returns the
// first violating pair found, or nothing. Independent cross-check oracle for
// is_convex_in_R4; deterministic for a fixed seed.
std::optional<std::pair<Point2, Point2>> convexity_refutation_sample(const MomentPolygon& omega,
                                                                     std::uint64_t seed,
                                                                     int random_points = 64);

// {mu >= 0 : A mu <= b} with componentwise nonnegative A and positive b.
// Every column must contain a positive entry (boundedness) and every row a
// nonzero one. Only nonnegative constraint matrices are supported: all
// operations in scope require them, and they keep boundedness decidable by
// inspection.
class HPolytope {
  public:
    HPolytope(std::vector<std::vector<Rational>> rows, std::vector<Rational> b);

    std::size_t dim() const { return rows_.empty() ? 0 : rows_[0].size(); }
    std::size_t constraint_count() const { return rows_.size(); }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    const std::vector<Rational>& b() const { return b_; }

  private:
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> b_;
};

// Largest a with the simplex {mu >= 0 : sum mu <= a} inside the polytope:
// min over rows i of b_i / max_j A_ij.
Rational simplex_inradius(const HPolytope& p);

// The staircase region {mu in [0, box]^n : mu_j <= a_j for some j}. Concave
// in the complement-convex sense before truncation; the box keeps it bounded
// and is recorded so results can be checked for truncation independence.
struct LShape {
    std::vector<Rational> a;
    Rational box;

    LShape(std::vector<Rational> a_, Rational box_);
    std::size_t dim() const { return a.size(); }
};

// The n = 2 staircase as a moment polygon.
MomentPolygon lshape_polygon(const LShape& l);

}  // namespace symcap
