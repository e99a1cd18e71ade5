#include "symcap/geometry.hpp"

#include <algorithm>

#include "symcap/errors.hpp"

namespace symcap {

Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
Int cross(const IntVec2& a, const IntVec2& b) { return a.x * b.y - a.y * b.x; }

IntVec2 primitive_direction(const Point2& v) {
    if (v.x == 0 && v.y == 0) throw ValidationError("primitive_direction of zero vector");
    const Int dx = denominator(v.x), dy = denominator(v.y);
    const Int l = lcm(dx, dy);
    Int ix = numerator(v.x) * (l / dx);
    Int iy = numerator(v.y) * (l / dy);
    const Int g = gcd(abs(ix), abs(iy));
    return {ix / g, iy / g};
}

IntVec2 primitive_outward_normal(const Point2& p, const Point2& q, InteriorSide side) {
    const IntVec2 d = primitive_direction(q - p);
    // Rotating d by +90 degrees gives the left normal (-d.y, d.x).
    if (side == InteriorSide::Right) return {-d.y, d.x};
    return {d.y, -d.x};
}

UnimodularAffine::UnimodularAffine(Int m00, Int m01, Int m10, Int m11, Point2 t)
    : m00_(std::move(m00)), m01_(std::move(m01)), m10_(std::move(m10)), m11_(std::move(m11)),
      t_(std::move(t)) {
    const Int d = m00_ * m11_ - m01_ * m10_;
    if (d != 1 && d != -1) throw ValidationError("matrix is not unimodular");
}

UnimodularAffine UnimodularAffine::identity() { return {1, 0, 0, 1}; }

UnimodularAffine UnimodularAffine::translation(const Point2& t) { return {1, 0, 0, 1, t}; }

Point2 UnimodularAffine::operator()(const Point2& p) const {
    return {Rational(m00_) * p.x + Rational(m01_) * p.y + t_.x,
            Rational(m10_) * p.x + Rational(m11_) * p.y + t_.y};
}

UnimodularAffine operator*(const UnimodularAffine& f, const UnimodularAffine& g) {
    return {f.m00_ * g.m00_ + f.m01_ * g.m10_, f.m00_ * g.m01_ + f.m01_ * g.m11_,
            f.m10_ * g.m00_ + f.m11_ * g.m10_, f.m10_ * g.m01_ + f.m11_ * g.m11_,
            {Rational(f.m00_) * g.t_.x + Rational(f.m01_) * g.t_.y + f.t_.x,
             Rational(f.m10_) * g.t_.x + Rational(f.m11_) * g.t_.y + f.t_.y}};
}

Int UnimodularAffine::det() const { return m00_ * m11_ - m01_ * m10_; }

UnimodularAffine UnimodularAffine::inverse() const {
    const Int d = det();
    // For det = +-1 the adjugate over det stays integral.
    UnimodularAffine inv(m11_ * d, -m01_ * d, -m10_ * d, m00_ * d);
    const Point2 it = inv(Point2{-t_.x, -t_.y});
    return {inv.m00_, inv.m01_, inv.m10_, inv.m11_, it};
}

bool point_on_segment(const Point2& p, const Point2& a, const Point2& b) {
    if (a == b) return p == a;
    const Point2 ab = b - a, ap = p - a;
    if (cross(ab, ap) != 0) return false;
    const Rational t = dot(ap, ab);
    return t >= 0 && t <= dot(ab, ab);
}

namespace {

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const int o1 = sign(cross(b - a, c - a));
    const int o2 = sign(cross(b - a, d - a));
    const int o3 = sign(cross(d - c, a - c));
    const int o4 = sign(cross(d - c, b - c));
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && point_on_segment(c, a, b)) return true;
    if (o2 == 0 && point_on_segment(d, a, b)) return true;
    if (o3 == 0 && point_on_segment(a, c, d)) return true;
    if (o4 == 0 && point_on_segment(b, c, d)) return true;
    return false;
}

Rational polygon_signed_area(const std::vector<Point2>& poly) {
    Rational s{0};
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) s += cross(poly[i], poly[(i + 1) % n]);
    return s / 2;
}

bool polygon_is_simple(const std::vector<Point2>& poly) {
    const size_t n = poly.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i)
        if (poly[i] == poly[(i + 1) % n]) return false;
    for (size_t i = 0; i < n; ++i) {
        const Point2 &a = poly[i], &b = poly[(i + 1) % n];
        // Adjacent edges may only meet at the shared vertex: reject backtracking.
        const Point2& c2 = poly[(i + 2) % n];
        if (cross(b - a, c2 - b) == 0 && dot(b - a, c2 - b) < 0) return false;
        for (size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_intersect(a, b, poly[j], poly[(j + 1) % n])) return false;
        }
    }
    return true;
}

Rational polygon_area(const std::vector<Point2>& poly) {
    if (!polygon_is_simple(poly)) throw ValidationError("polygon boundary self-intersects");
    return abs(polygon_signed_area(poly));
}

std::vector<Point2> ensure_ccw(std::vector<Point2> poly) {
    if (polygon_signed_area(poly) < 0) std::reverse(poly.begin(), poly.end());
    return poly;
}

bool polygon_contains(const std::vector<Point2>& poly, const Point2& p) {
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i)
        if (point_on_segment(p, poly[i], poly[(i + 1) % n])) return true;
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Point2 &a = poly[i], &b = poly[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            // x coordinate where the edge crosses the horizontal through p
            const Rational xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

bool polygon_is_convex(const std::vector<Point2>& poly) {
    const size_t n = poly.size();
    if (n < 3) return false;
    int expected = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point2 e1 = poly[(i + 1) % n] - poly[i];
        const Point2 e2 = poly[(i + 2) % n] - poly[(i + 1) % n];
        const int s = sign(cross(e1, e2));
        if (s == 0) continue;
        if (expected == 0)
            expected = s;
        else if (s != expected)
            return false;
    }
    return expected != 0;
}

namespace {

// True when the outward edge normals of ccw polygon p yield a line with q
// entirely on the outside (touching allowed).
bool has_separating_edge(const std::vector<Point2>& p, const std::vector<Point2>& q) {
    const size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2 &a = p[i], &b = p[(i + 1) % n];
        const Point2 nrm{b.y - a.y, a.x - b.x};  // outward for ccw order
        bool all_outside = true;
        for (const Point2& u : q) {
            if (dot(nrm, u - a) < 0) {
                all_outside = false;
                break;
            }
        }
        if (all_outside) return true;
    }
    return false;
}

}  // namespace

bool convex_interiors_disjoint(const std::vector<Point2>& p, const std::vector<Point2>& q) {
    const std::vector<Point2> cp = ensure_ccw(p), cq = ensure_ccw(q);
    return has_separating_edge(cp, cq) || has_separating_edge(cq, cp);
}

}  // namespace symcap
