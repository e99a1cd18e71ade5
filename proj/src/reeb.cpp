#include "symcap/reeb.hpp"

#include "symcap/errors.hpp"

namespace symcap {

namespace {

void require_star_shaped(const MomentPolygon& omega, const char* op) {
    if (!classify(omega).star_shaped) {
        throw ClassMismatchError(std::string(op) + " requires a star-shaped profile");
    }
}

// Rotation number of the axis_1 orbit over (A,0). The incident edge is the
// last chain edge; it approaches the mu1 axis from above, so dy < 0 always.
Rational axis1_rotation(const MomentPolygon& omega) {
    const Edge& e = omega.edges().back();
    Rational dx = Rational(e.b.x - e.a.x);
    Rational dy = Rational(e.b.y - e.a.y);
    return Rational(1 - dx / dy);
}

// Rotation number of the axis_2 orbit over (0,B). The incident edge is the
// first chain edge; it leaves the mu2 axis to the right, so dx > 0 always.
Rational axis2_rotation(const MomentPolygon& omega) {
    const Edge& e = omega.edges().front();
    Rational dx = Rational(e.b.x - e.a.x);
    Rational dy = Rational(e.b.y - e.a.y);
    return Rational(1 - dy / dx);
}

ReebOrbitInfo axis1_orbit(const MomentPolygon& omega) {
    return ReebOrbitInfo{OrbitKind::Axis1, Point2{omega.A(), 0}, std::nullopt, omega.A(),
                         axis1_rotation(omega)};
}

ReebOrbitInfo axis2_orbit(const MomentPolygon& omega) {
    return ReebOrbitInfo{OrbitKind::Axis2, Point2{0, omega.B()}, std::nullopt, omega.B(),
                         axis2_rotation(omega)};
}

ReebOrbitInfo edge_family(const Edge& e) {
    Point2 mid{Rational((e.a.x + e.b.x) / 2), Rational((e.a.y + e.b.y) / 2)};
    return ReebOrbitInfo{OrbitKind::TorusFamily, mid, e.normal, e.offset,
                         Rational(Int(e.normal.x + e.normal.y))};
}

}  // namespace

std::string to_string(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::Axis1: return "axis_1";
        case OrbitKind::Axis2: return "axis_2";
        case OrbitKind::TorusFamily: return "torus_family";
    }
    throw Error("unknown orbit kind");
}

std::vector<ReebOrbitInfo> enumerate_orbits(const MomentPolygon& omega,
                                            const Rational& action_cap) {
    require_star_shaped(omega, "enumerate_orbits");
    std::vector<ReebOrbitInfo> out;
    ReebOrbitInfo ax1 = axis1_orbit(omega);
    if (ax1.action <= action_cap) out.push_back(ax1);
    ReebOrbitInfo ax2 = axis2_orbit(omega);
    if (ax2.action <= action_cap) out.push_back(ax2);
    for (const Edge& e : omega.edges()) {
        ReebOrbitInfo fam = edge_family(e);
        if (fam.action <= action_cap) out.push_back(fam);
    }
    return out;
}

Rational a_min(const MomentPolygon& omega) {
    require_star_shaped(omega, "a_min");
    Rational best = std::min(omega.A(), omega.B());
    for (const Edge& e : omega.edges()) best = std::min(best, e.offset);
    return best;
}

DynConvexVerdict is_dynamically_convex(const MomentPolygon& omega) {
    require_star_shaped(omega, "is_dynamically_convex");
    if (classify(omega).strictly_monotone) return DynConvexVerdict{true, std::nullopt};

    DynConvexVerdict v{false, std::nullopt};

    // An edge whose normal sums to at most 1 carries a whole family with
    // rho <= 1.
    for (const Edge& e : omega.edges()) {
        if (e.normal.x + e.normal.y <= 1) {
            v.witness = edge_family(e);
            return v;
        }
    }

    // Axis orbits pick up rho <= 1 when the incident edge is vertical,
    // horizontal, or leans the wrong way.
    ReebOrbitInfo ax1 = axis1_orbit(omega);
    if (ax1.rotation_number <= 1) {
        v.witness = ax1;
        return v;
    }
    ReebOrbitInfo ax2 = axis2_orbit(omega);
    if (ax2.rotation_number <= 1) {
        v.witness = ax2;
        return v;
    }

    // Remaining obstruction: a convex corner of the chain whose outward
    // normal cone (swept clockwise from the incoming to the outgoing edge
    // normal) contains (1,0) or (0,1). Smoothing the corner produces a torus
    // family with that normal, so rho = 1 and action = corner . normal.
    const auto& edges = omega.edges();
    const IntVec2 axes[2] = {IntVec2{1, 0}, IntVec2{0, 1}};
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const IntVec2& nin = edges[i].normal;
        const IntVec2& nout = edges[i + 1].normal;
        if (cross(nin, nout) >= 0) continue;  // not a convex corner
        for (const IntVec2& u : axes) {
            if (cross(nin, u) <= 0 && cross(u, nout) <= 0) {
                const Point2& corner = edges[i].b;
                Rational action = Rational(Rational(u.x) * corner.x + Rational(u.y) * corner.y);
                v.witness = ReebOrbitInfo{OrbitKind::TorusFamily, corner, u, action, 1};
                return v;
            }
        }
    }

    // Unreachable for star-shaped profiles: a chain that is not strictly
    // monotone and dodges the edge and axis checks must contain a strictly
    // ascending (up-right) or strictly retreating (down-left) edge, and
    // star-shapedness forces the transition back to a descending edge to
    // happen at a convex corner whose cone contains an axis direction.
    throw Error("internal: non-convex domain without a rho <= 1 witness");
}

}  // namespace symcap
