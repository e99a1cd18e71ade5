#include "symcap/normalized.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "symcap/catalog.hpp"
#include "symcap/ech.hpp"
#include "symcap/errors.hpp"

namespace symcap {

namespace {

// Minimum of mu_1 + mu_2 over the closed boundary arc. The functional is
// linear on every edge, so scanning vertices is exact.
Rational min_vertex_sum(const MomentPolygon& omega) {
    Rational best = omega.B();
    for (const Point2& v : omega.chain()) best = std::min(best, Rational(v.x + v.y));
    return best;
}

TriState tri_equal(const RatInterval& gr, const RatInterval& z) {
    if (gr.exact() && z.exact() && gr.lo == z.lo) return TriState::Holds;
    if (gr.hi < z.lo) return TriState::Fails;
    return TriState::Unknown;
}

TriState tri_viterbo(const RatInterval& z, const Rational& two_vol) {
    if (z.hi * z.hi <= two_vol) return TriState::Holds;
    if (z.lo * z.lo > two_vol) return TriState::Fails;
    return TriState::Unknown;
}

}  // namespace

Rational c1_ch_concave(const MomentPolygon& omega) {
    if (!classify(omega).concave)
        throw ClassMismatchError("c1_ch_concave requires a concave profile");
    return min_vertex_sum(omega);
}

Rational c1_ch_concave(const HPolytope& p) {
    // The complement of an intersection of several halfspaces is not convex,
    // so the concave case is exactly one cut {alpha . mu <= b} of the
    // orthant. Construction already guarantees alpha > 0 componentwise.
    if (p.constraint_count() != 1)
        throw ClassMismatchError("a concave H-polytope is a single halfspace cut");
    Rational amax = 0;
    for (const Rational& v : p.rows()[0]) amax = std::max(amax, v);
    return p.b()[0] / amax;
}

Rational c1_ch_concave(const LShape& l) {
    Rational sum = 0;
    for (const Rational& a : l.a) sum += a;
    // The inner corner realizes sum(a_j); a box face cut below that level
    // would realize the box size instead.
    return std::min(sum, l.box);
}

Rational c1_ch_monotone(const MomentPolygon& omega) {
    if (!classify(omega).monotone)
        throw ClassMismatchError("c1_ch_monotone requires a monotone profile");
    return min_vertex_sum(omega);
}

Rational c1_ch_monotone(const HPolytope& p) { return simplex_inradius(p); }

Rational gromov_width_monotone_4d(const MomentPolygon& omega) { return c1_ch_monotone(omega); }

Rational cylindrical_capacity_monotone_4d(const MomentPolygon& omega) {
    return c1_ch_monotone(omega);
}

Rational cylindrical_capacity_weakly_convex(const MomentPolygon& omega) {
    if (!classify(omega).weakly_convex)
        throw ClassMismatchError("the min(M1, M2) formula requires a weakly convex profile");
    const Rational m1 = omega.M1();
    const Rational m2 = omega.M2();
    // Both walls are reached at chain vertices, and the extreme ordinate
    // along each wall is also attained at a vertex.
    std::optional<Rational> y_at_right, x_at_top;
    for (const Point2& v : omega.chain()) {
        if (v.x == m1 && (!y_at_right || v.y < *y_at_right)) y_at_right = v.y;
        if (v.y == m2 && (!x_at_top || v.x < *x_at_top)) x_at_top = v.x;
    }
    const bool ok1 = *y_at_right <= m1;
    const bool ok2 = *x_at_top <= m2;
    if (ok1 && ok2) return std::min(m1, m2);
    const std::string side = !ok1 && !ok2 ? "M1,M2" : (!ok1 ? "M1" : "M2");
    throw HypothesisError("boundary does not reach the " + side +
                              " wall at a point dominated by the wall size",
                          side);
}

std::optional<DiamondCertificate> best_diamond(const MomentPolygon& omega) {
    if (!classify(omega).weakly_convex)
        throw ClassMismatchError("diamond certificates require a weakly convex profile");

    // Maximize delta over (c1, c2, delta) subject to the diamond's support
    // function staying inside every edge halfplane, plus delta <= c1, c2 and
    // delta >= 0. The feasible set is a compact polytope, so the optimum sits
    // on a vertex cut out by three independent active constraints.
    struct Row {
        std::array<Rational, 3> n;
        Rational rhs;
    };
    std::vector<Row> rows;
    for (const Edge& e : omega.edges()) {
        const Rational m =
            std::max(Rational(abs(e.normal.x)), Rational(abs(e.normal.y)));
        rows.push_back({{Rational(e.normal.x), Rational(e.normal.y), m}, e.offset});
    }
    rows.push_back({{-1, 0, 1}, 0});
    rows.push_back({{0, -1, 1}, 0});
    rows.push_back({{0, 0, -1}, 0});

    auto det3 = [](const std::array<Rational, 3>& a, const std::array<Rational, 3>& b,
                   const std::array<Rational, 3>& c) {
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
               a[2] * (b[0] * c[1] - b[1] * c[0]);
    };

    std::optional<std::array<Rational, 3>> best;
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Rational d = det3(rows[i].n, rows[j].n, rows[k].n);
                if (d == 0) continue;
                std::array<Rational, 3> x;
                for (int col = 0; col < 3; ++col) {
                    std::array<Rational, 3> a = rows[i].n, b = rows[j].n, c = rows[k].n;
                    a[col] = rows[i].rhs;
                    b[col] = rows[j].rhs;
                    c[col] = rows[k].rhs;
                    x[col] = det3(a, b, c) / d;
                }
                bool feasible = true;
                for (const Row& r : rows) {
                    if (r.n[0] * x[0] + r.n[1] * x[1] + r.n[2] * x[2] > r.rhs) {
                        feasible = false;
                        break;
                    }
                }
                if (feasible && (!best || x[2] > (*best)[2])) best = x;
            }

    if (!best || (*best)[2] <= 0) return std::nullopt;
    return DiamondCertificate{(*best)[0], (*best)[1], (*best)[2]};
}

Rational gromov_width_Xa(const Rational& a) {
    const MomentPolygon xa = make_Xa(a);
    const Rational width = std::min(Rational(1 - a), Rational(2 - 4 * a));
    if (weakly_convex_capacity(1, xa) != width)
        throw Error("internal: X_a Gromov width disagrees with the first ECH capacity");
    return width;
}

std::string to_string(TriState t) {
    switch (t) {
        case TriState::Holds: return "holds";
        case TriState::Fails: return "fails";
        default: return "unknown";
    }
}

CapacityReport viterbo_report(const MomentPolygon& omega) {
    CapacityReport rep;
    rep.volume = volume(omega);
    const Rational two_vol = 2 * rep.volume;
    const DomainClass cls = classify(omega);

    if (cls.monotone) {
        const Rational v = c1_ch_monotone(omega);
        rep.c_gr = RatInterval(v);
        rep.c_z = RatInterval(v);
        rep.c1_ch = v;
        if (cls.concave)
            rep.c1_ech = concave_capacity(1, omega);
        else if (cls.weakly_convex)
            rep.c1_ech = weakly_convex_capacity(1, omega);
        rep.viterbo_ratio = {v * v, two_vol};
        rep.strong_viterbo = TriState::Holds;
        rep.viterbo = v * v <= two_vol ? TriState::Holds : TriState::Fails;
        return rep;
    }

    if (const auto xa = detect_Xa(omega)) {
        const auto& [a, lambda] = *xa;
        const Rational gr = lambda * std::min(Rational(1 - a), Rational(2 - 4 * a));
        const Rational cz = lambda * (1 - a);
        rep.c_gr = RatInterval(gr);
        rep.c_z = RatInterval(cz);
        rep.c1_ech = weakly_convex_capacity(1, omega);
        rep.viterbo_ratio = {cz * cz, two_vol};
        rep.strong_viterbo = gr == cz ? TriState::Holds : TriState::Fails;
        rep.viterbo = cz * cz <= two_vol ? TriState::Holds : TriState::Fails;
        return rep;
    }

    if (cls.weakly_convex) {
        const Rational c1e = weakly_convex_capacity(1, omega);
        rep.c1_ech = c1e;
        // Ball certificates: the inscribed simplex through the axis
        // endpoints, possibly beaten by the best diamond.
        Rational ball_lo = std::min(omega.A(), omega.B());
        if (const auto d = best_diamond(omega)) ball_lo = std::max(ball_lo, d->ball());
        rep.c_gr = RatInterval(ball_lo, c1e);
        const Rational wall = std::min(omega.M1(), omega.M2());
        try {
            const Rational cz = cylindrical_capacity_weakly_convex(omega);
            rep.c_z = RatInterval(cz);
            rep.viterbo_ratio = {cz * cz, two_vol};
        } catch (const HypothesisError&) {
            rep.c_z = RatInterval(c1e, wall);
        }
        rep.strong_viterbo = tri_equal(*rep.c_gr, *rep.c_z);
        rep.viterbo = tri_viterbo(*rep.c_z, two_vol);
        return rep;
    }

    if (cls.star_shaped) {
        // Star-shapedness makes the largest inscribed simplex exactly the
        // minimal vertex sum; inclusion in a cylinder caps both capacities.
        const Rational lo = min_vertex_sum(omega);
        const Rational hi = std::min(omega.M1(), omega.M2());
        rep.c_gr = RatInterval(lo, hi);
        rep.c_z = RatInterval(lo, hi);
        rep.strong_viterbo = tri_equal(*rep.c_gr, *rep.c_z);
        rep.viterbo = tri_viterbo(*rep.c_z, two_vol);
        return rep;
    }

    return rep;
}

}  // namespace symcap
