#pragma once

#include <vector>

#include "symcap/rational.hpp"

namespace symcap {

struct Point2 {
    Rational x{0};
    Rational y{0};

    friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }
    bool operator==(const Point2&) const = default;
};

// Integer vector, used for primitive edge directions and normals.
struct IntVec2 {
    Int x{0};
    Int y{0};
    bool operator==(const IntVec2&) const = default;
};

Rational cross(const Point2& a, const Point2& b);
Rational dot(const Point2& a, const Point2& b);
Int cross(const IntVec2& a, const IntVec2& b);

// Scale a nonzero rational vector to the primitive integer vector with the
// same direction.
IntVec2 primitive_direction(const Point2& v);

enum class InteriorSide { Left, Right };

// Primitive integer normal to the segment p -> q pointing away from the
// interior, where the interior lies on the given side of the direction q - p.
IntVec2 primitive_outward_normal(const Point2& p, const Point2& q, InteriorSide side);

// Affine map x -> M x + t with M integral and det M = +-1.
class UnimodularAffine {
  public:
    UnimodularAffine(Int m00, Int m01, Int m10, Int m11, Point2 t = {});

    static UnimodularAffine identity();
    static UnimodularAffine translation(const Point2& t);

    Point2 operator()(const Point2& p) const;
    // Composition: (f * g)(p) == f(g(p)).
    friend UnimodularAffine operator*(const UnimodularAffine& f, const UnimodularAffine& g);
    UnimodularAffine inverse() const;

    Int det() const;
    const Int& m00() const { return m00_; }
    const Int& m01() const { return m01_; }
    const Int& m10() const { return m10_; }
    const Int& m11() const { return m11_; }
    const Point2& t() const { return t_; }

    bool operator==(const UnimodularAffine&) const = default;

  private:
    Int m00_, m01_, m10_, m11_;
    Point2 t_;
};

// Exact predicates on segments and simple polygons.

bool point_on_segment(const Point2& p, const Point2& a, const Point2& b);

// Proper or improper intersection of closed segments.
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

// Signed area (shoelace): positive for counterclockwise vertex order.
Rational polygon_signed_area(const std::vector<Point2>& poly);

// Unsigned area of a simple polygon; throws ValidationError if the boundary
// self-intersects.
Rational polygon_area(const std::vector<Point2>& poly);

bool polygon_is_simple(const std::vector<Point2>& poly);

// Reverse the vertex order if needed so the polygon is counterclockwise.
std::vector<Point2> ensure_ccw(std::vector<Point2> poly);

// Even-odd test; boundary points count as contained.
bool polygon_contains(const std::vector<Point2>& poly, const Point2& p);

// True if the polygon is convex (vertices in either orientation, collinear
// runs allowed).
bool polygon_is_convex(const std::vector<Point2>& poly);

// Separating-axis test for convex polygons: true when the interiors do not
// meet (sharing boundary is fine).
bool convex_interiors_disjoint(const std::vector<Point2>& p, const std::vector<Point2>& q);

}  // namespace symcap
