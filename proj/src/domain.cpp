#include "symcap/domain.hpp"

#include <algorithm>
#include <random>

#include "symcap/errors.hpp"

namespace symcap {

MomentPolygon::MomentPolygon(std::vector<Point2> boundary_plus) {
    if (boundary_plus.size() < 2)
        throw ValidationError("boundary chain needs at least two vertices");
    const Point2& front = boundary_plus.front();
    const Point2& back = boundary_plus.back();
    if (front.x != 0 || front.y <= 0)
        throw ValidationError("chain must start at (0, B) with B > 0");
    if (back.y != 0 || back.x <= 0) throw ValidationError("chain must end at (A, 0) with A > 0");
    for (std::size_t i = 1; i + 1 < boundary_plus.size(); ++i) {
        const Point2& v = boundary_plus[i];
        if (v.x <= 0 || v.y <= 0)
            throw ValidationError("interior chain vertices must be strictly positive");
    }
    for (std::size_t i = 0; i + 1 < boundary_plus.size(); ++i)
        if (boundary_plus[i] == boundary_plus[i + 1])
            throw ValidationError("zero-length chain edge");

    // Merge collinear runs; a reversal inside a run is a fold, not a vertex.
    chain_.push_back(boundary_plus.front());
    for (std::size_t i = 1; i + 1 < boundary_plus.size(); ++i) {
        const Point2 d1 = boundary_plus[i] - chain_.back();
        const Point2 d2 = boundary_plus[i + 1] - boundary_plus[i];
        if (cross(d1, d2) == 0) {
            if (dot(d1, d2) <= 0) throw ValidationError("chain backtracks on itself");
            continue;
        }
        chain_.push_back(boundary_plus[i]);
    }
    chain_.push_back(boundary_plus.back());

    closed_.push_back({0, 0});
    for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) closed_.push_back(*it);
    if (!polygon_is_simple(closed_)) throw ValidationError("boundary is not a simple polygon");
    area_ = polygon_signed_area(closed_);
    if (area_ <= 0) throw ValidationError("region has nonpositive area");

    for (std::size_t i = 0; i + 1 < chain_.size(); ++i) {
        Edge e;
        e.a = chain_[i];
        e.b = chain_[i + 1];
        e.normal = primitive_outward_normal(e.a, e.b, InteriorSide::Right);
        e.offset = Rational(e.normal.x) * e.a.x + Rational(e.normal.y) * e.a.y;
        edges_.push_back(std::move(e));
    }

    m1_ = 0;
    m2_ = 0;
    for (const Point2& v : chain_) {
        m1_ = std::max(m1_, v.x);
        m2_ = std::max(m2_, v.y);
    }
}

bool MomentPolygon::contains(const Point2& p) const { return polygon_contains(closed_, p); }

MomentPolygon MomentPolygon::scaled(const Rational& lambda) const {
    if (lambda <= 0) throw RangeError("scale factor must be positive");
    std::vector<Point2> scaled_chain;
    scaled_chain.reserve(chain_.size());
    for (const Point2& v : chain_) scaled_chain.push_back(lambda * v);
    return MomentPolygon(std::move(scaled_chain));
}

std::vector<std::string> DomainClass::flag_names() const {
    std::vector<std::string> out;
    if (star_shaped) out.push_back("star_shaped");
    if (monotone) out.push_back("monotone");
    if (strictly_monotone) out.push_back("strictly_monotone");
    if (concave) out.push_back("concave");
    if (convex_toric) out.push_back("convex_toric");
    if (weakly_convex) out.push_back("weakly_convex");
    if (convex_in_R4) out.push_back("convex_in_R4");
    return out;
}

DomainClass classify(const MomentPolygon& omega) {
    DomainClass c;
    c.monotone = true;
    c.strictly_monotone = true;
    c.star_shaped = true;
    for (const Edge& e : omega.edges()) {
        if (e.normal.x < 0 || e.normal.y < 0) c.monotone = false;
        if (e.normal.x < 1 || e.normal.y < 1) c.strictly_monotone = false;
        if (e.offset <= 0) c.star_shaped = false;
    }

    // Concave: the chain heads right-and-down throughout and always turns
    // left, so the complement of the region in the quadrant is convex.
    c.concave = true;
    const auto& chain = omega.chain();
    std::vector<Point2> dirs;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) dirs.push_back(chain[i + 1] - chain[i]);
    for (const Point2& d : dirs)
        if (d.x < 0 || d.y > 0) c.concave = false;
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i)
        if (cross(dirs[i], dirs[i + 1]) <= 0) c.concave = false;

    c.weakly_convex = polygon_is_convex(omega.closed_polygon());
    c.convex_toric = c.weakly_convex && c.monotone;
    c.convex_in_R4 = c.convex_toric;
    return c;
}

bool is_convex_in_R4(const MomentPolygon& omega) { return classify(omega).convex_in_R4; }

Rational volume(const MomentPolygon& omega) { return omega.area(); }

bool lift_contains(const MomentPolygon& omega, const Point2& p) {
    return omega.contains({p.x * p.x, p.y * p.y});
}

namespace {

void push_lift_candidates(const MomentPolygon& omega, const Point2& mu, std::vector<Point2>& pool) {
    const Rational lx = mu.x == 0 ? Rational(0) : sqrt_lower_bound(mu.x, 24);
    const Rational ly = mu.y == 0 ? Rational(0) : sqrt_lower_bound(mu.y, 24);
    for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
            const Point2 q{Rational(sx) * lx, Rational(sy) * ly};
            if (lift_contains(omega, q)) pool.push_back(q);
        }
    }
}

Int ceil_to_int(const Rational& q) {
    // q > 0 assumed
    return (numerator(q) + denominator(q) - 1) / denominator(q);
}

}  // namespace

std::optional<std::pair<Point2, Point2>> convexity_refutation_sample(const MomentPolygon& omega,
                                                                     std::uint64_t seed,
                                                                     int random_points) {
    std::vector<Point2> pool;
    for (const Point2& v : omega.chain()) push_lift_candidates(omega, v, pool);
    for (const Edge& e : omega.edges()) {
        push_lift_candidates(omega, Rational(1, 2) * (e.a + e.b), pool);
        push_lift_candidates(omega, Rational(1, 3) * e.a + Rational(2, 3) * e.b, pool);
    }

    std::mt19937_64 eng(seed);
    const Int den = 1024;
    const Int nx = ceil_to_int(sqrt_upper_bound(omega.M1()) * den);
    const Int ny = ceil_to_int(sqrt_upper_bound(omega.M2()) * den);
    for (int i = 0; i < random_points; ++i) {
        const Int mx = Int(eng()) % (2 * nx + 1) - nx;
        const Int my = Int(eng()) % (2 * ny + 1) - ny;
        const Point2 q{Rational(mx, den), Rational(my, den)};
        if (lift_contains(omega, q)) pool.push_back(q);
    }

    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            const Point2 mid = Rational(1, 2) * (pool[i] + pool[j]);
            if (!lift_contains(omega, mid)) return std::make_pair(pool[i], pool[j]);
        }
    }
    return std::nullopt;
}

HPolytope::HPolytope(std::vector<std::vector<Rational>> rows, std::vector<Rational> b)
    : rows_(std::move(rows)), b_(std::move(b)) {
    if (rows_.empty()) throw ValidationError("constraint matrix is empty");
    const std::size_t n = rows_[0].size();
    if (n == 0) throw ValidationError("constraint matrix has no columns");
    if (b_.size() != rows_.size()) throw ValidationError("constraint sides do not match rows");
    for (const auto& row : rows_) {
        if (row.size() != n) throw ValidationError("ragged constraint matrix");
        bool nonzero = false;
        for (const Rational& v : row) {
            if (v < 0)
                throw ValidationError("only nonnegative constraint matrices are supported");
            if (v > 0) nonzero = true;
        }
        if (!nonzero) throw ValidationError("zero constraint row");
    }
    for (const Rational& v : b_)
        if (v <= 0) throw ValidationError("constraint sides must be positive");
    for (std::size_t j = 0; j < n; ++j) {
        bool bounded = false;
        for (const auto& row : rows_)
            if (row[j] > 0) bounded = true;
        if (!bounded) throw ValidationError("region is unbounded in a coordinate direction");
    }
}

Rational simplex_inradius(const HPolytope& p) {
    Rational best;
    bool first = true;
    for (std::size_t i = 0; i < p.constraint_count(); ++i) {
        Rational row_max = 0;
        for (const Rational& v : p.rows()[i]) row_max = std::max(row_max, v);
        const Rational cand = p.b()[i] / row_max;
        if (first || cand < best) {
            best = cand;
            first = false;
        }
    }
    return best;
}

LShape::LShape(std::vector<Rational> a_, Rational box_) : a(std::move(a_)), box(std::move(box_)) {
    if (a.empty()) throw ValidationError("staircase needs at least one arm");
    for (const Rational& v : a) {
        if (v <= 0) throw ValidationError("staircase arms must be positive");
        if (v >= box) throw ValidationError("truncation box must exceed every arm");
    }
}

MomentPolygon lshape_polygon(const LShape& l) {
    if (l.dim() != 2) throw ValidationError("polygon form exists only in dimension two");
    const Rational &a1 = l.a[0], &a2 = l.a[1], &t = l.box;
    return MomentPolygon({{0, t}, {a1, t}, {a1, a2}, {t, a2}, {t, 0}});
}

}  // namespace symcap
