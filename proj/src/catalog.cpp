#include "symcap/catalog.hpp"

#include <algorithm>
#include <random>

#include "symcap/errors.hpp"

namespace symcap {

namespace {

Rational rat_pow(const Rational& x, unsigned k) {
    Rational out = 1;
    for (unsigned i = 0; i < k; ++i) out *= x;
    return out;
}

std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Andrew's monotone chain; returns hull vertices counterclockwise starting
// at the lexicographically smallest point, collinear midpoints dropped.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;

    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 &&
               cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

MomentPolygon make_Xa(const Rational& a) {
    if (a <= 0 || a >= Rational(1, 2))
        throw RangeError("X_a parameter must satisfy 0 < a < 1/2");
    const Rational one = 1;
    return MomentPolygon({{0, one - 2 * a}, {a, one - a}, {one - a, a}, {one - 2 * a, 0}});
}

std::optional<std::pair<Rational, Rational>> detect_Xa(const MomentPolygon& omega) {
    const auto& chain = omega.chain();
    if (chain.size() != 4) return std::nullopt;
    const Rational scale = Rational(chain[1].x + chain[1].y);
    if (scale <= 0) return std::nullopt;
    const Rational a = chain[1].x / scale;
    if (a <= 0 || a >= Rational(1, 2)) return std::nullopt;
    if (omega == make_Xa(a).scaled(scale)) return std::make_pair(a, scale);
    return std::nullopt;
}

MomentPolygon make_ellipsoid(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw RangeError("ellipsoid factors must be positive");
    return MomentPolygon({{0, b}, {a, 0}});
}

MomentPolygon make_polydisk(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw RangeError("polydisk factors must be positive");
    return MomentPolygon({{0, b}, {a, b}, {a, 0}});
}

MomentPolygon make_simplex(const Rational& r) {
    if (r <= 0) throw RangeError("simplex size must be positive");
    return MomentPolygon({{0, r}, {r, 0}});
}

LShape make_Lshape(std::vector<Rational> a) {
    Rational sum = 0;
    for (const Rational& v : a) sum += v;
    return LShape(std::move(a), sum * 2);
}

MomentPolygon make_lp_ball(const Rational& p, int samples) {
    if (p <= 0) throw RangeError("L^p exponent must be positive");
    if (samples < 2) throw RangeError("need at least two samples");
    if (p == 1) return make_simplex(1);

    const unsigned u = numerator(p).convert_to<unsigned>();
    const unsigned v = denominator(p).convert_to<unsigned>();
    const int N = samples;
    std::vector<Point2> pts;

    if (p == 2) {
        // Rational points on the circle via the tangent-half-angle map.
        for (int j = N; j >= 0; --j) {
            const Rational t(j, N);
            const Rational d = 1 + t * t;
            pts.push_back({(1 - t * t) / d, 2 * t / d});
        }
    } else if (u == 1) {
        // p = 1/v: the curve x^(1/v) + y^(1/v) = 1 is rationally parametrized
        // by x = t^v, y = (1-t)^v.
        for (int j = 0; j <= N; ++j) {
            const Rational t(j, N);
            pts.push_back({rat_pow(t, v), rat_pow(1 - t, v)});
        }
    } else {
        // Certified inside points: x fixed rational, y a lower bound on
        // (1 - x^p)^(1/p) obtained from root brackets so that the bound
        // x^(u/v) + y^(u/v) <= 1 holds exactly.
        pts.push_back({0, 1});
        for (int j = 1; j < N; ++j) {
            const Rational x(j, N);
            Point2 pt;
            for (unsigned bits = 48;; bits *= 2) {
                if (bits > 1536) throw Error("internal: lp sample did not certify");
                const Rational qx = kth_root_bounds(rat_pow(x, u), v, bits).second;
                if (qx >= 1) continue;
                const Rational y = kth_root_bounds(rat_pow(1 - qx, v), u, bits).first;
                if (y <= 0 || y >= pts.back().y) continue;
                pt = {x, y};
                break;
            }
            pts.push_back(pt);
        }
        pts.push_back({1, 0});
    }

    // Envelope filter: keep the chain convex for p >= 1 and concave for
    // p < 1, dropping interior sample points that fall on the wrong side.
    const bool convex_side = p > 1;
    std::vector<Point2> chain;
    for (const Point2& pt : pts) {
        while (chain.size() >= 2) {
            const Rational turn = cross(pt - chain[chain.size() - 2],
                                        chain.back() - chain[chain.size() - 2]);
            // turn > 0: new point is right of the previous direction.
            const bool drop = convex_side ? turn <= 0 : turn >= 0;
            if (!drop) break;
            chain.pop_back();
        }
        chain.push_back(pt);
    }
    return MomentPolygon(chain);
}

MomentPolygon random_monotone_polygon(std::uint64_t seed, int n_vertices) {
    if (n_vertices < 2) throw RangeError("need at least two chain vertices");
    std::mt19937_64 rng(seed);
    const int edges = n_vertices - 1;

    std::vector<Point2> steps;
    Rational prev_slope = 0;
    for (int i = 0; i < edges; ++i) {
        while (true) {
            const Rational dx(rand_int(rng, 1, 6)), dy(rand_int(rng, 1, 6));
            if (i > 0 && dy / dx == prev_slope) continue;  // avoid collinear merge
            prev_slope = dy / dx;
            steps.push_back({dx, -dy});
            break;
        }
    }

    Rational B = 0;
    for (const Point2& s : steps) B -= s.y;
    const Rational lambda(rand_int(rng, 1, 8), rand_int(rng, 1, 8));

    std::vector<Point2> chain{{0, B}};
    for (const Point2& s : steps) chain.push_back(chain.back() + s);
    for (Point2& v : chain) v = lambda * v;
    return MomentPolygon(chain);
}

MomentPolygon random_concave_polygon(std::uint64_t seed, int n_vertices) {
    if (n_vertices < 2) throw RangeError("need at least two chain vertices");
    std::mt19937_64 rng(seed);
    const int edges = n_vertices - 1;

    // Distinct slopes sorted steepest-first give strict left turns.
    std::vector<std::pair<std::int64_t, std::int64_t>> dirs;  // (dx, dy-magnitude)
    while (static_cast<int>(dirs.size()) < edges) {
        const std::int64_t px = rand_int(rng, 1, 9), qy = rand_int(rng, 1, 9);
        bool fresh = true;
        for (const auto& [dx, dy] : dirs)
            if (dx * qy == dy * px) fresh = false;
        if (fresh) dirs.emplace_back(px, qy);
    }
    std::sort(dirs.begin(), dirs.end(), [](const auto& a, const auto& b) {
        return a.second * b.first > b.second * a.first;  // q/p descending
    });

    const Rational lambda(rand_int(rng, 1, 8), rand_int(rng, 1, 8));
    std::vector<Point2> steps;
    for (const auto& [dx, dy] : dirs) {
        const Rational len(rand_int(rng, 1, 4));
        steps.push_back({len * dx, -(len * dy)});
    }
    Rational B = 0;
    for (const Point2& s : steps) B -= s.y;
    std::vector<Point2> chain{{0, B}};
    for (const Point2& s : steps) chain.push_back(chain.back() + s);
    for (Point2& v : chain) v = lambda * v;
    return MomentPolygon(chain);
}

MomentPolygon random_weakly_convex_polygon(std::uint64_t seed, int n_vertices) {
    if (n_vertices < 2) throw RangeError("need at least two chain vertices");
    std::mt19937_64 rng(seed);

    while (true) {
        const Rational A(rand_int(rng, 2, 12), rand_int(rng, 1, 2));
        const Rational B(rand_int(rng, 2, 12), rand_int(rng, 1, 2));
        std::vector<Point2> pts{{0, 0}, {A, 0}, {0, B}};
        for (int i = 0; i + 2 < n_vertices; ++i) {
            const std::int64_t den = rand_int(rng, 1, 3);
            pts.push_back({Rational(rand_int(rng, 1, 12), den),
                           Rational(rand_int(rng, 1, 12), den)});
        }

        std::vector<Point2> hull = convex_hull(pts);
        if (hull.size() < 3 || !(hull[0] == Point2{0, 0})) continue;
        std::vector<Point2> chain(hull.rbegin(), hull.rend() - 1);
        MomentPolygon omega(chain);

        // Keep the inscribed-simplex gap healthy so capacity scans on these
        // domains terminate quickly: 2*area >= r^2/3.
        Rational r = 0;
        for (const Point2& p : omega.chain()) r = std::max(r, Rational(p.x + p.y));
        if (omega.area() * 6 >= r * r) return omega;
    }
}

}  // namespace symcap
