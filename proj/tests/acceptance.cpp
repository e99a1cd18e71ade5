// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Each criterion is independent and exact (runtime budgets are part
// of criteria 1 and 2).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "symcap/catalog.hpp"
#include "symcap/domain.hpp"
#include "symcap/ech.hpp"
#include "symcap/embed.hpp"
#include "symcap/normalized.hpp"
#include "symcap/reeb.hpp"
#include "symcap/weights.hpp"

using namespace symcap;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(Int(n), Int(d)); }

Rational min_vertex_sum(const MomentPolygon& omega) {
    Rational best = omega.chain().front().x + omega.chain().front().y;
    for (const Point2& v : omega.chain()) best = std::min(best, Rational(v.x + v.y));
    return best;
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.empty()) detail = why;
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

// 1. Ball rule: c_k(B(1)) matches the lattice oracle for k <= 200, with the
// spot values c_1 = c_2 = 1, c_5 = 2, in under a second.
Outcome criterion_1() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::int64_t k = 0; k <= 200; ++k)
        out.require(ball_capacity(k, 1) == ellipsoid_oracle(k, 1, 1),
                    "mismatch at k=" + std::to_string(k));
    out.require(ball_capacity(1, 1) == 1 && ball_capacity(2, 1) == 1 && ball_capacity(5, 1) == 2,
                "spot values c1, c2, c5");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(secs < 1.0, "runtime " + std::to_string(secs) + "s over the 1s budget");
    return out;
}

// 2. Concave capacities of E(1,q) equal the lattice oracle for
// q in {1, 3/2, 2, 3} and k <= 50, in under five seconds.
Outcome criterion_2() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    for (const Rational& q : {rat(1), rat(3, 2), rat(2), rat(3)}) {
        const MomentPolygon e = make_ellipsoid(1, q);
        for (std::int64_t k = 0; k <= 50; ++k)
            out.require(concave_capacity(k, e) == ellipsoid_oracle(k, 1, q),
                        "E(1," + to_string(q) + ") mismatch at k=" + std::to_string(k));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(secs < 5.0, "runtime " + std::to_string(secs) + "s over the 5s budget");
    return out;
}

// 3. X_a widths: c_gr = min(1-a, 2-4a), c_z = 1-a, and the first ECH
// capacity agrees with the Gromov width, all exact.
Outcome criterion_3() {
    Outcome out;
    for (const Rational& a : {rat(1, 10), rat(1, 5), rat(1, 4), rat(3, 10), rat(1, 3), rat(3, 8),
                              rat(2, 5), rat(9, 20)}) {
        const MomentPolygon xa = make_Xa(a);
        const CapacityReport rep = viterbo_report(xa);
        const Rational want_gr = std::min(Rational(1 - a), Rational(2 - 4 * a));
        out.require(rep.c_gr && rep.c_gr->exact() && rep.c_gr->value() == want_gr,
                    "c_gr at a=" + to_string(a));
        out.require(rep.c_z && rep.c_z->exact() && rep.c_z->value() == Rational(1 - a),
                    "c_z at a=" + to_string(a));
        out.require(weakly_convex_capacity(1, xa) == want_gr, "c_1 at a=" + to_string(a));
    }
    return out;
}

// 4. Scanning a in steps of 1/60: strong Viterbo holds exactly up to 1/3,
// the Viterbo inequality exactly up to 2/5, with equality at the thresholds.
Outcome criterion_4() {
    Outcome out;
    for (int j = 1; j <= 29; ++j) {
        const Rational a = rat(j, 60);
        const CapacityReport rep = viterbo_report(make_Xa(a));
        const bool strong_want = j <= 20, viterbo_want = j <= 24;
        out.require((rep.strong_viterbo == TriState::Holds) == strong_want,
                    "strong Viterbo flip at a=" + to_string(a));
        out.require((rep.viterbo == TriState::Holds) == viterbo_want,
                    "Viterbo flip at a=" + to_string(a));
        if (j == 20)
            out.require(rep.c_gr->value() == rep.c_z->value() && rep.c_gr->value() == rat(2, 3),
                        "equality of widths at a=1/3");
        if (j == 24)
            out.require(rep.viterbo_ratio && rep.viterbo_ratio->first == rep.viterbo_ratio->second,
                        "c_z^2 = 2 vol equality at a=2/5");
    }
    return out;
}

// 5. On strictly monotone domains the Gromov width, cylindrical capacity,
// and first equivariant capacity all equal the minimal vertex sum; the
// H-polytope inradius agrees with the vertex scan on polygon twins.
Outcome criterion_5() {
    Outcome out;
    int found = 0;
    for (std::uint64_t seed = 1; seed <= 2000 && found < 100; ++seed) {
        const MomentPolygon omega = random_monotone_polygon(seed, 3 + static_cast<int>(seed % 4));
        if (!classify(omega).strictly_monotone) continue;
        ++found;
        const Rational want = min_vertex_sum(omega);
        out.require(c1_ch_monotone(omega) == want, "c1 != vertex scan, seed " + std::to_string(seed));
        out.require(gromov_width_monotone_4d(omega) == want,
                    "c_gr != vertex scan, seed " + std::to_string(seed));
        out.require(cylindrical_capacity_monotone_4d(omega) == want,
                    "c_z != vertex scan, seed " + std::to_string(seed));
    }
    out.require(found == 100, "only " + std::to_string(found) + " strictly monotone samples");

    struct Twin {
        HPolytope poly;
        MomentPolygon omega;
    };
    const std::vector<Twin> twins = {
        {HPolytope({{1, 0}, {0, 1}}, {2, 3}), make_polydisk(2, 3)},
        {HPolytope({{1, 0}, {0, 1}}, {rat(3, 2), rat(3, 2)}), make_polydisk(rat(3, 2), rat(3, 2))},
        {HPolytope({{1, 1}}, {rat(7, 3)}), make_simplex(rat(7, 3))},
        {HPolytope({{1, 2}, {2, 1}}, {4, 4}),
         MomentPolygon({{0, 2}, {rat(4, 3), rat(4, 3)}, {2, 0}})},
        {HPolytope({{1, 0}, {1, 3}}, {3, 6}), MomentPolygon({{0, 2}, {3, 1}, {3, 0}})},
    };
    for (std::size_t i = 0; i < twins.size(); ++i) {
        const Rational scan = min_vertex_sum(twins[i].omega);
        out.require(simplex_inradius(twins[i].poly) == scan,
                    "inradius != vertex scan on twin " + std::to_string(i));
        out.require(c1_ch_monotone(twins[i].poly) == scan,
                    "hpolytope c1 != vertex scan on twin " + std::to_string(i));
    }
    return out;
}

// 6. Dynamical convexity coincides with strict monotonicity on the catalog
// and 100 random domains; X_a yields a rho = 0 witness and a flat-top
// domain a rho = 1 witness.
Outcome criterion_6() {
    Outcome out;
    std::vector<MomentPolygon> domains = {
        make_simplex(1),
        make_ellipsoid(1, 2),
        make_ellipsoid(2, 3),
        make_polydisk(1, 1),
        make_polydisk(2, 3),
        make_Xa(rat(1, 4)),
        make_Xa(rat(3, 8)),
        lshape_polygon(make_Lshape({2, 1})),
        make_lp_ball(3, 24),
        make_lp_ball(rat(1, 2), 12),
        MomentPolygon({{0, 2}, {1, rat(3, 2)}, {2, 0}}),
    };
    for (std::uint64_t seed = 1; seed <= 34; ++seed)
        domains.push_back(random_monotone_polygon(seed, 5));
    for (std::uint64_t seed = 1; seed <= 33; ++seed)
        domains.push_back(random_concave_polygon(seed, 6));
    for (std::uint64_t seed = 1; seed <= 33; ++seed)
        domains.push_back(random_weakly_convex_polygon(seed, 6));

    for (std::size_t i = 0; i < domains.size(); ++i) {
        const auto verdict = is_dynamically_convex(domains[i]);
        out.require(verdict.dynamically_convex == classify(domains[i]).strictly_monotone,
                    "verdict != flag on domain " + std::to_string(i));
        if (!verdict.dynamically_convex) {
            out.require(verdict.witness.has_value(), "missing witness on domain " + std::to_string(i));
            if (verdict.witness)
                out.require(verdict.witness->rotation_number <= 1,
                            "witness rho > 1 on domain " + std::to_string(i));
        }
    }

    const auto xa_verdict = is_dynamically_convex(make_Xa(rat(3, 8)));
    out.require(!xa_verdict.dynamically_convex && xa_verdict.witness &&
                    xa_verdict.witness->rotation_number == 0,
                "X_a must yield a rho = 0 witness");
    const auto flat_verdict = is_dynamically_convex(MomentPolygon({{0, 1}, {1, 1}, {2, 0}}));
    out.require(!flat_verdict.dynamically_convex && flat_verdict.witness &&
                    flat_verdict.witness->rotation_number == 1 &&
                    flat_verdict.witness->normal == IntVec2{0, 1},
                "flat-top domain must yield a rho = 1 witness");
    return out;
}

// 7. Truncated staircases: c1 equals the arm sum, independent of the box.
Outcome criterion_7() {
    Outcome out;
    const std::vector<std::vector<Rational>> sets = {
        {2, 1}, {rat(3, 2), rat(5, 2)}, {1, 2, 3}};
    for (const auto& arms : sets) {
        Rational sum = 0;
        for (const Rational& a : arms) sum += a;
        const Rational small_box = 2 * sum, big_box = 3 * sum;
        out.require(c1_ch_concave(LShape(arms, small_box)) == sum,
                    "arm sum with box " + to_string(small_box));
        out.require(c1_ch_concave(LShape(arms, big_box)) == sum,
                    "box dependence with box " + to_string(big_box));
    }
    return out;
}

// 8. Area conservation: weight squares exhaust twice the area on concave
// domains; on weakly convex ones the enclosing simplex balances the inner
// weights.
Outcome criterion_8() {
    Outcome out;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const MomentPolygon omega = random_concave_polygon(seed, 6);
        out.require(weight_sequence(omega).sum_of_squares() == 2 * omega.area(),
                    "concave seed " + std::to_string(seed));
    }
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const MomentPolygon omega = random_weakly_convex_polygon(seed, 6);
        const OuterDecomposition od = outer_decomposition(omega);
        out.require(od.r * od.r ==
                        Rational(2 * omega.area() + od.inner_weights.sum_of_squares()),
                    "weakly convex seed " + std::to_string(seed));
    }
    return out;
}

// 9. Ball-into-X_a harness: no violation through K = 200 for
// a in {1/10, 1/4, 1/3}; obstruction at k = 1 for a in {3/8, 2/5}, with the
// reported values recomputed independently.
Outcome criterion_9() {
    Outcome out;
    for (const Rational& a : {rat(1, 10), rat(1, 4), rat(1, 3)}) {
        const auto verdict = check_concave_into_weakly_convex(make_simplex(Rational(1 - a)),
                                                              make_Xa(a), 200);
        out.require(verdict.status != EmbedStatus::Obstructed,
                    "unexpected obstruction at a=" + to_string(a));
    }
    for (const Rational& a : {rat(3, 8), rat(2, 5)}) {
        const MomentPolygon ball = make_simplex(Rational(1 - a));
        const MomentPolygon xa = make_Xa(a);
        const auto verdict = check_concave_into_weakly_convex(ball, xa, 200);
        out.require(verdict.status == EmbedStatus::Obstructed &&
                        verdict.obstruction_index == std::int64_t{1},
                    "expected k=1 obstruction at a=" + to_string(a));
        if (verdict.obstruction_values) {
            const auto& [src, tgt] = *verdict.obstruction_values;
            out.require(src == concave_capacity(1, ball) &&
                            tgt == weakly_convex_capacity(1, xa) && src > tgt,
                        "obstruction values do not self-verify at a=" + to_string(a));
        } else {
            out.fail("missing obstruction values at a=" + to_string(a));
        }
    }
    return out;
}

// 10. Certified stopping: on random weakly convex domains, the truncated
// scan returns the same capacity as a brute-force scan ten times past the
// stopping index.
Outcome criterion_10() {
    Outcome out;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const MomentPolygon omega = random_weakly_convex_polygon(seed, 5);
        WeaklyConvexCapacities wc(omega);
        UnionCapacityTable inner(wc.inner());
        for (std::int64_t k = 0; k <= 20; ++k) {
            const WeaklyConvexValue certified = wc.at_detail(k);
            const std::int64_t l_max = 10 * certified.l_stop;
            inner.ensure(l_max);
            Rational brute = ball_capacity(k, wc.r());
            for (std::int64_t l = 1; l <= l_max; ++l)
                brute = std::min(brute,
                                 Rational(ball_capacity(k + l, wc.r()) - inner.value_at(l)));
            out.require(certified.value == brute, "seed " + std::to_string(seed) + ", k=" +
                                                      std::to_string(k));
        }
    }
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"ball rule matches the lattice oracle for k <= 200 (< 1 s)", criterion_1},
        {"E(1,q) concave capacities equal the lattice oracle, k <= 50 (< 5 s)", criterion_2},
        {"X_a Gromov width and cylindrical capacity, eight exact values", criterion_3},
        {"strong Viterbo flips after 1/3, Viterbo after 2/5, equality at both", criterion_4},
        {"strictly monotone: three capacities equal the vertex scan, 100 samples", criterion_5},
        {"dynamical convexity == strict monotonicity, with rho 0 and rho 1 witnesses",
         criterion_6},
        {"truncated staircase c1 equals the arm sum, box-independent", criterion_7},
        {"weight squares exhaust the area, 100 + 100 random domains", criterion_8},
        {"ball into X_a: clear for a <= 1/3, k=1 obstruction for a > 1/3", criterion_9},
        {"certified stopping equals brute force to 10x the stopping index", criterion_10},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %2zu. %s%s%s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
        if (!out.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
