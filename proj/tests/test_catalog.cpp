#include <doctest.h>

#include <algorithm>

#include "symcap/catalog.hpp"
#include "symcap/domain.hpp"
#include "symcap/errors.hpp"

using namespace symcap;

namespace {

Rational pow_k(const Rational& x, unsigned k) {
    Rational out = 1;
    for (unsigned i = 0; i < k; ++i) out *= x;
    return out;
}

Rational max_vertex_sum(const MomentPolygon& omega) {
    Rational r = 0;
    for (const Point2& p : omega.chain()) r = std::max(r, Rational(p.x + p.y));
    return r;
}

}  // namespace

TEST_CASE("make_Xa produces the expected chain and classification") {
    const MomentPolygon x = make_Xa(Rational(1, 4));
    const std::vector<Point2> want{
        {0, Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)},
        {Rational(3, 4), Rational(1, 4)}, {Rational(1, 2), 0}};
    CHECK(x.chain() == want);

    const DomainClass cls = classify(x);
    CHECK(cls.star_shaped);
    CHECK(cls.weakly_convex);
    CHECK_FALSE(cls.monotone);
    CHECK_FALSE(cls.strictly_monotone);
    CHECK_FALSE(cls.concave);
    CHECK_FALSE(cls.convex_toric);

    CHECK_THROWS_AS(make_Xa(Rational(0)), RangeError);
    CHECK_THROWS_AS(make_Xa(Rational(1, 2)), RangeError);
    CHECK_THROWS_AS(make_Xa(Rational(-1, 4)), RangeError);
}

TEST_CASE("detect_Xa round trips, including scaled copies") {
    for (const Rational& a :
         {Rational(1, 4), Rational(3, 8), Rational(2, 5), Rational(9, 20), Rational(1, 100)}) {
        const auto hit = detect_Xa(make_Xa(a));
        REQUIRE(hit.has_value());
        CHECK(hit->first == a);
        CHECK(hit->second == 1);

        const auto scaled = detect_Xa(make_Xa(a).scaled(Rational(7, 3)));
        REQUIRE(scaled.has_value());
        CHECK(scaled->first == a);
        CHECK(scaled->second == Rational(7, 3));
    }

    CHECK_FALSE(detect_Xa(make_polydisk(1, 1)).has_value());
    CHECK_FALSE(detect_Xa(make_simplex(1)).has_value());
    // Four vertices but not the symmetric corner pattern.
    CHECK_FALSE(detect_Xa(MomentPolygon({{0, 1}, {1, 4}, {4, 1}, {2, 0}})).has_value());
    CHECK_FALSE(detect_Xa(MomentPolygon({{0, 3}, {2, 3}, {3, 2}, {3, 0}})).has_value());
    // A scaled copy is recognized through its corner, not its exact size.
    const auto four = detect_Xa(MomentPolygon({{0, 2}, {1, 3}, {3, 1}, {2, 0}}));
    REQUIRE(four.has_value());
    CHECK(four->first == Rational(1, 4));
    CHECK(four->second == 4);
}

TEST_CASE("ellipsoid, polydisk and simplex builders") {
    const MomentPolygon e = make_ellipsoid(2, 3);
    CHECK(e.chain() == std::vector<Point2>{{0, 3}, {2, 0}});
    CHECK(classify(e).concave);
    CHECK(classify(e).weakly_convex);
    CHECK(classify(e).strictly_monotone);

    const MomentPolygon p = make_polydisk(2, 3);
    CHECK(p.chain() == std::vector<Point2>{{0, 3}, {2, 3}, {2, 0}});
    CHECK(p.area() == 6);
    const DomainClass pc = classify(p);
    CHECK(pc.monotone);
    CHECK(pc.convex_toric);
    CHECK_FALSE(pc.strictly_monotone);
    CHECK_FALSE(pc.concave);

    CHECK(make_simplex(Rational(5, 2)) == make_ellipsoid(Rational(5, 2), Rational(5, 2)));

    CHECK_THROWS_AS(make_ellipsoid(0, 1), RangeError);
    CHECK_THROWS_AS(make_polydisk(1, Rational(-2)), RangeError);
    CHECK_THROWS_AS(make_simplex(0), RangeError);
}

TEST_CASE("make_Lshape picks a box clear of every arm") {
    const LShape l = make_Lshape({2, 1});
    CHECK(l.box == 6);
    CHECK(lshape_polygon(l).chain() ==
          std::vector<Point2>{{0, 6}, {2, 6}, {2, 1}, {6, 1}, {6, 0}});

    const LShape l3 = make_Lshape({Rational(1, 2), Rational(1, 3), Rational(1, 5)});
    CHECK(l3.box == 2 * (Rational(1, 2) + Rational(1, 3) + Rational(1, 5)));
    CHECK(l3.dim() == 3);
}

TEST_CASE("lp ball: exact parametrizations") {
    CHECK(make_lp_ball(1, 16) == make_simplex(1));

    const MomentPolygon circle = make_lp_ball(2, 8);
    CHECK(circle.chain().size() == 9);
    CHECK(circle.chain().front() == Point2{0, 1});
    CHECK(circle.chain().back() == Point2{1, 0});
    for (const Point2& v : circle.chain()) CHECK(v.x * v.x + v.y * v.y == 1);
    const DomainClass cc = classify(circle);
    CHECK(cc.convex_toric);
    CHECK(cc.strictly_monotone);

    const MomentPolygon half = make_lp_ball(Rational(1, 2), 8);
    CHECK(half.chain().size() == 9);
    for (int j = 0; j <= 8; ++j) {
        const Rational t(j, 8);
        CHECK(half.chain()[j] == Point2{t * t, (1 - t) * (1 - t)});
    }
    CHECK(classify(half).concave);
    CHECK(classify(half).strictly_monotone);
}

TEST_CASE("lp ball: certified interior approximations") {
    const MomentPolygon q34 = make_lp_ball(Rational(3, 4), 12);
    CHECK(classify(q34).concave);
    // p < 1 puts the ball inside the simplex.
    for (const Point2& v : q34.chain()) CHECK(v.x + v.y <= 1);
    CHECK(q34.area() < Rational(1, 2));
    CHECK(q34.area() > Rational(1, 4));
    // Vertices certify x^p + y^p <= 1: x^3 <= s^4 and y^3 <= (1-s)^4 for some
    // rational 0 <= s <= 1 forces the bound, and s can be recovered as an
    // upper root bracket of x^3.
    for (const Point2& v : q34.chain()) {
        const Rational s = kth_root_bounds(pow_k(v.x, 3), 4, 256).second;
        REQUIRE(s <= 1);
        CHECK(pow_k(v.x, 3) <= pow_k(s, 4));
        CHECK(pow_k(v.y, 3) <= pow_k(1 - s, 4));
    }

    const MomentPolygon q3 = make_lp_ball(3, 12);
    const DomainClass c3 = classify(q3);
    CHECK(c3.convex_toric);
    CHECK(c3.strictly_monotone);
    CHECK(q3.area() > Rational(1, 2));
    CHECK(q3.area() < 1);
    for (const Point2& v : q3.chain()) {
        CHECK(v.x <= 1);
        CHECK(v.y <= 1);
    }

    CHECK_THROWS_AS(make_lp_ball(0, 8), RangeError);
    CHECK_THROWS_AS(make_lp_ball(Rational(-2), 8), RangeError);
    CHECK_THROWS_AS(make_lp_ball(2, 1), RangeError);
}

TEST_CASE("random monotone polygons are strictly monotone with full vertex count") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        for (int n : {2, 3, 6, 9}) {
            const MomentPolygon omega = random_monotone_polygon(seed, n);
            CHECK(classify(omega).strictly_monotone);
            CHECK(omega.chain().size() == static_cast<std::size_t>(n));
        }
    }
    CHECK(random_monotone_polygon(7, 5) == random_monotone_polygon(7, 5));
    CHECK_FALSE(random_monotone_polygon(1, 5) == random_monotone_polygon(2, 5));
    CHECK_THROWS_AS(random_monotone_polygon(1, 1), RangeError);
}

TEST_CASE("random concave polygons are concave with full vertex count") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        for (int n : {2, 3, 6, 9}) {
            const MomentPolygon omega = random_concave_polygon(seed, n);
            const DomainClass cls = classify(omega);
            CHECK(cls.concave);
            CHECK(cls.strictly_monotone);
            CHECK(omega.chain().size() == static_cast<std::size_t>(n));
        }
    }
    CHECK(random_concave_polygon(11, 6) == random_concave_polygon(11, 6));
    CHECK_FALSE(random_concave_polygon(3, 6) == random_concave_polygon(4, 6));
}

TEST_CASE("random weakly convex polygons satisfy the class and the area gap") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        for (int n : {3, 5, 8}) {
            const MomentPolygon omega = random_weakly_convex_polygon(seed, n);
            const DomainClass cls = classify(omega);
            CHECK(cls.weakly_convex);
            CHECK(cls.star_shaped);
            const Rational r = max_vertex_sum(omega);
            CHECK(omega.area() * 6 >= r * r);
        }
    }
    CHECK(random_weakly_convex_polygon(5, 6) == random_weakly_convex_polygon(5, 6));
}
