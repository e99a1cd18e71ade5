#include "symcap/embed.hpp"

#include <algorithm>
#include <utility>

#include "symcap/catalog.hpp"
#include "symcap/errors.hpp"

namespace symcap {

namespace {

Rational sum_of_squares(const std::vector<Rational>& xs) {
    Rational s = 0;
    for (const Rational& x : xs) s = Rational(s + x * x);
    return s;
}

}  // namespace

std::string to_string(EmbedStatus status) {
    switch (status) {
        case EmbedStatus::Embeds: return "embeds";
        case EmbedStatus::Obstructed: return "obstructed";
        case EmbedStatus::VerifiedUpTo: return "verified_up_to";
    }
    throw Error("unknown embed status");
}

EmbedVerdict check_concave_into_weakly_convex(const MomentPolygon& src,
                                              const MomentPolygon& tgt,
                                              std::int64_t k_max, Exec exec) {
    if (!classify(src).concave) {
        throw ClassMismatchError("embedding check requires a concave source");
    }
    if (!classify(tgt).weakly_convex) {
        throw ClassMismatchError("embedding check requires a weakly convex target");
    }
    if (k_max < 1) throw RangeError("k_max must be at least 1");

    WeightSequence sw = weight_sequence(src);
    UnionCapacityTable source_table(sw.weights);
    source_table.ensure(k_max, exec);
    WeaklyConvexCapacities wc(tgt);
    std::vector<Rational> target_table = wc.table(k_max, exec);

    EmbedVerdict v;
    v.checked_up_to = k_max;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        const Rational& cs = source_table.value_at(k);
        const Rational& ct = target_table[static_cast<std::size_t>(k)];
        if (cs > ct) {
            v.status = EmbedStatus::Obstructed;
            v.checked_up_to = k - 1;
            v.obstruction_index = k;
            v.obstruction_values = std::make_pair(cs, ct);
            return v;
        }
    }

    // Tail bound: c_k(src) <= sqrt(2kS) while c_k(tgt) >= sqrt(2kT/2) - 3r/2
    // with T = 2(r^2 - s^2). Once sqrt(k)(sqrt(T) - sqrt(2S)) >= 3r/2 at
    // k = k_max + 1, every later k passes as well. Checked through rational
    // square-root brackets, refining until the open inequality resolves.
    const Rational& r = wc.r();
    Rational s2 = sum_of_squares(wc.inner());
    Rational target_q = Rational(2 * (r * r - s2));
    Rational source_q = Rational(2 * sw.sum_of_squares());
    if (target_q > source_q) {
        for (unsigned bits = 48; bits <= 384; bits *= 2) {
            Rational g = Rational(kth_root_bounds(target_q, 2, bits).first -
                                  kth_root_bounds(source_q, 2, bits).second);
            if (g <= 0) continue;
            if (Rational(4 * (k_max + 1) * g * g) >= Rational(9 * r * r)) {
                v.status = EmbedStatus::Embeds;
                v.certificate =
                    "tail certificate: c_k(source) <= sqrt(2kS) and c_k(target) >= "
                    "sqrt(2k(r^2-s^2)) - 3r/2 for every k, and 4(K+1)(sqrt(2(r^2-s^2)) - "
                    "sqrt(2S))^2 >= 9r^2 at K = " +
                    std::to_string(k_max) + ", so every k > K passes";
                break;
            }
        }
    }
    return v;
}

EmbedVerdict check_concave_into_polydisk(const MomentPolygon& src, const Rational& r,
                                         const Rational& R, std::int64_t k_max, Exec exec) {
    if (r <= 0 || R <= 0) throw RangeError("polydisk sides must be positive");
    MomentPolygon rect({Point2{0, R}, Point2{r, R}, Point2{r, 0}});
    return check_concave_into_weakly_convex(src, rect, k_max, exec);
}

std::array<Point2, 3> triangle_corners(const PlacedTriangle& t) {
    return {t.placement(Point2{0, 0}), t.placement(Point2{t.size, 0}),
            t.placement(Point2{0, t.size})};
}

std::array<Point2, 4> DiamondDatum::corners() const {
    const Rational& h = half_diagonal;
    return {Point2{Rational(center.x + h), center.y}, Point2{center.x, Rational(center.y + h)},
            Point2{Rational(center.x - h), center.y}, Point2{center.x, Rational(center.y - h)}};
}

XaPackingCertificate ball_packing_certificate_Xa(const Rational& a) {
    MomentPolygon xa = make_Xa(a);  // validates 0 < a < 1/2
    XaPackingCertificate cert;
    cert.a = a;
    cert.ball = std::min(Rational(1 - a), Rational(2 - 4 * a));
    const Rational third(1, 3);

    if (a <= third) {
        // The strip Delta^2(1) \ Delta^2(1-a) tiles into alternating upward
        // and downward translates of Delta^2(a); four of them fit for every
        // a <= 1/3 (the last corner (2a, 1-3a) needs 1-3a >= 0).
        std::vector<PlacedTriangle> pieces;
        pieces.push_back({UnimodularAffine(1, 0, 0, 1), Rational(1 - a)});
        pieces.push_back({UnimodularAffine(1, 0, 0, 1, Point2{0, Rational(1 - a)}), a});
        pieces.push_back({UnimodularAffine(-1, 0, 0, -1, Point2{a, Rational(1 - a)}), a});
        pieces.push_back({UnimodularAffine(1, 0, 0, 1, Point2{a, Rational(1 - 2 * a)}), a});
        pieces.push_back(
            {UnimodularAffine(-1, 0, 0, -1, Point2{Rational(2 * a), Rational(1 - 2 * a)}), a});

        MomentPolygon container = make_simplex(1);
        std::vector<std::vector<Point2>> corner_lists;
        for (const PlacedTriangle& piece : pieces) {
            auto c = triangle_corners(piece);
            for (const Point2& pt : c) {
                if (!container.contains(pt)) {
                    throw Error("internal: packing triangle leaves the unit simplex");
                }
            }
            corner_lists.emplace_back(c.begin(), c.end());
        }
        for (std::size_t i = 0; i < corner_lists.size(); ++i) {
            for (std::size_t j = i + 1; j < corner_lists.size(); ++j) {
                if (!convex_interiors_disjoint(corner_lists[i], corner_lists[j])) {
                    throw Error("internal: packing triangles overlap");
                }
            }
        }
        cert.triangles = std::move(pieces);
        cert.note =
            "triangle packing: B(1-a) and four B(a) placed as corner triangles in "
            "Delta^2(1) with pairwise disjoint interiors (verified exactly)";
    }
    if (a >= third) {
        DiamondDatum d{Point2{a, a}, Rational(1 - 2 * a)};
        if (!(d.half_diagonal > 0 && d.center.x >= d.half_diagonal &&
              d.center.y >= d.half_diagonal)) {
            throw Error("internal: diamond certificate hypothesis fails");
        }
        for (const Point2& pt : d.corners()) {
            if (!xa.contains(pt)) throw Error("internal: diamond corner leaves the profile");
        }
        std::string diamond_note =
            "diamond: center (a,a), half-diagonal 1-2a, inscribed in the profile; the "
            "ball-into-diamond embedding is a cited input, not re-verified by capacities "
            "(the diamond is not a toric profile)";
        cert.diamond = d;
        cert.note = cert.note.empty() ? diamond_note : cert.note + "; " + diamond_note;
    }
    return cert;
}

}  // namespace symcap
