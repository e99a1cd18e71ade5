#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "symcap/catalog.hpp"
#include "symcap/ech.hpp"
#include "symcap/errors.hpp"
#include "symcap/io.hpp"
#include "symcap/normalized.hpp"
#include "symcap/reeb.hpp"

using namespace symcap;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(Int(n), Int(d)); }

std::string parse_error_message(const Json& j, const std::string& field) {
    try {
        rational_from_json(j, field);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("rational JSON pairs round-trip in canonical form") {
    CHECK(rational_to_json(rat(3, 8)) == Json::array({3, 8}));
    CHECK(rational_to_json(rat(-5, 3)) == Json::array({-5, 3}));
    CHECK(rational_to_json(rat(0)) == Json::array({0, 1}));
    CHECK(rational_to_json(rat(2, 4)) == Json::array({1, 2}));

    CHECK(rational_from_json(Json::array({3, 8}), "x") == rat(3, 8));
    CHECK(rational_from_json(Json::array({6, 16}), "x") == rat(3, 8));

    CHECK(parse_error_message(Json("3/8"), "w").find("w") != std::string::npos);
    CHECK(parse_error_message(Json::array({1, 2, 3}), "w").find("pair") != std::string::npos);
    CHECK(parse_error_message(Json::array({1, 0}), "w").find("positive") != std::string::npos);
    CHECK(parse_error_message(Json::array({1, -2}), "w").find("positive") != std::string::npos);
    CHECK(parse_error_message(Json::array({1.5, 2}), "w").find("integer") != std::string::npos);
    // 2^63 parses as unsigned and must be rejected, not wrapped.
    CHECK(parse_error_message(Json::parse("[9223372036854775808, 1]"), "w").find("range") !=
          std::string::npos);
}

TEST_CASE("polygon JSON round-trips bit-exactly") {
    const MomentPolygon omega = make_Xa(rat(3, 8));
    const Json j = polygon_to_json(omega);
    CHECK(j["type"] == "polygon");
    CHECK(polygon_from_json(j) == omega);

    // Diagnostics name the offending field.
    Json bad = j;
    bad["boundary_plus"][1][0] = Json::array({1, 0});
    try {
        polygon_from_json(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("boundary_plus[1].x") != std::string::npos);
    }
    CHECK_THROWS_AS(polygon_from_json(Json::object()), ParseError);
}

TEST_CASE("hpolytope JSON round-trips and validates") {
    const Json j = Json::parse(R"({"type":"hpolytope",
        "A":[[[1,1],[0,1]],[[0,1],[1,1]],[[1,2],[1,1]]],
        "b":[[2,1],[3,1],[5,2]]})");
    const HPolytope p = hpolytope_from_json(j);
    CHECK(p.dim() == 2);
    CHECK(p.constraint_count() == 3);
    CHECK(p.rows()[2][0] == rat(1, 2));
    // b_i / max_j A_ij: min(2, 3, 5/2) = 2.
    CHECK(simplex_inradius(p) == 2);

    CHECK_THROWS_AS(hpolytope_from_json(Json::parse(R"({"A":[[[1,1]]]})")), ParseError);
    CHECK_THROWS_AS(hpolytope_from_json(Json::parse(R"({"b":[[1,1]]})")), ParseError);
}

TEST_CASE("named families parse from JSON objects") {
    const DomainInput xa = domain_from_json(Json::parse(R"({"type":"xa","a":[3,8]})"), "t");
    REQUIRE(xa.polygon.has_value());
    CHECK(*xa.polygon == make_Xa(rat(3, 8)));

    const DomainInput ball = domain_from_json(Json::parse(R"({"type":"ball","r":[5,8]})"), "t");
    CHECK(*ball.polygon == make_simplex(rat(5, 8)));

    const DomainInput ell =
        domain_from_json(Json::parse(R"({"type":"ellipsoid","a":[1,1],"b":[2,1]})"), "t");
    CHECK(*ell.polygon == make_ellipsoid(1, 2));

    const DomainInput pd =
        domain_from_json(Json::parse(R"({"type":"polydisk","a":[2,1],"b":[3,1]})"), "t");
    CHECK(*pd.polygon == make_polydisk(2, 3));

    // Planar L-shape gets a polygon; higher-dimensional ones stay abstract.
    const DomainInput l2 =
        domain_from_json(Json::parse(R"({"type":"lshape","a":[[2,1],[1,1]],"box":[6,1]})"), "t");
    REQUIRE(l2.lshape.has_value());
    CHECK(l2.lshape->box == 6);
    CHECK(l2.polygon.has_value());
    const DomainInput l3 =
        domain_from_json(Json::parse(R"({"type":"lshape","a":[[2,1],[1,1],[1,2]]})"), "t");
    CHECK(l3.lshape->dim() == 3);
    CHECK(!l3.polygon.has_value());

    CHECK_THROWS_AS(domain_from_json(Json::parse(R"({"type":"torus"})"), "t"), ParseError);
    CHECK_THROWS_AS(domain_from_json(Json::parse(R"({"boundary_plus":[]})"), "t"), ParseError);
    CHECK_THROWS_AS(domain_from_json(Json::parse(R"({"type":"lp","p":[1,2],"samples":1})"), "t"),
                    ParseError);
}

TEST_CASE("domain spec strings parse families and files") {
    CHECK(*parse_domain_spec("simplex:1").polygon == make_simplex(1));
    CHECK(*parse_domain_spec("ball:5/8").polygon == make_simplex(rat(5, 8)));
    CHECK(*parse_domain_spec("xa:3/8").polygon == make_Xa(rat(3, 8)));
    CHECK(*parse_domain_spec("ellipsoid:1,2").polygon == make_ellipsoid(1, 2));
    CHECK(*parse_domain_spec("polydisk:2,3").polygon == make_polydisk(2, 3));
    CHECK(*parse_domain_spec("lp:1/2,8").polygon == make_lp_ball(rat(1, 2), 8));

    const DomainInput l = parse_domain_spec("lshape:2,1");
    REQUIRE(l.lshape.has_value());
    CHECK(l.lshape->box == 6);  // default box, twice the arm sum
    CHECK(parse_domain_spec("lshape:2,1,5").lshape->box == 5);

    CHECK_THROWS_AS(parse_domain_spec("xa:"), ParseError);
    CHECK_THROWS_AS(parse_domain_spec("xa:1,2"), ParseError);
    CHECK_THROWS_AS(parse_domain_spec("ellipsoid:1"), ParseError);
    CHECK_THROWS_AS(parse_domain_spec("mystery:1"), ParseError);
    CHECK_THROWS_AS(parse_domain_spec("lp:2,0"), ParseError);
    CHECK_THROWS_AS(parse_domain_spec("no_such_file.json"), ParseError);

    const std::string path = "io_roundtrip_domain.json";
    {
        std::ofstream out(path);
        out << polygon_to_json(make_Xa(rat(1, 4))).dump();
    }
    const DomainInput from_file = parse_domain_spec(path);
    CHECK(*from_file.polygon == make_Xa(rat(1, 4)));
    CHECK(from_file.spec == path);
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "{\"type\":";
    }
    try {
        parse_domain_spec(path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("malformed JSON") != std::string::npos);
    }
    std::remove(path.c_str());
}

TEST_CASE("classification JSON carries the flags and geometry") {
    const Json j = classification_to_json(parse_domain_spec("xa:3/8"));
    CHECK(j["domain"] == "xa:3/8");
    CHECK(j["star_shaped"] == true);
    CHECK(j["monotone"] == false);
    CHECK(j["weakly_convex"] == true);
    CHECK(j["convex_in_R4"] == false);
    CHECK(j["A"] == Json::array({1, 4}));  // chain endpoint; the bulge pushes M1 to 5/8
    CHECK(j["M1"] == Json::array({5, 8}));

    DomainInput hp;
    hp.spec = "hp";
    hp.hpolytope = HPolytope({{1, 0}, {0, 1}}, {2, 3});
    const Json hj = classification_to_json(hp);
    CHECK(hj["type"] == "hpolytope");
    CHECK(hj["dim"] == 2);
    CHECK(hj["simplex_inradius"] == Json::array({2, 1}));
}

TEST_CASE("weight sequence JSON is sorted descending with depth metadata") {
    const WeightSequence ws = weight_sequence(make_ellipsoid(1, 2));
    const Json j = weight_sequence_to_json(ws);
    CHECK(j["count"] == 2);
    CHECK(j["weights"] == Json::array({Json::array({1, 1}), Json::array({1, 1})}));
    CHECK(j["sum_of_squares"] == Json::array({2, 1}));
    CHECK(j["max_depth"] == 1);
    CHECK(ws.triangles[0].depth == 0);
}

TEST_CASE("capacity report JSON uses pairs, intervals, and tri-state strings") {
    const Json j = capacity_report_to_json(viterbo_report(make_Xa(rat(1, 4))));
    CHECK(j["c_gr"] == Json::array({3, 4}));
    CHECK(j["c_z"] == Json::array({3, 4}));
    CHECK(j["c1_ch"].is_null());
    CHECK(j["volume"] == Json::array({3, 8}));
    CHECK(j["viterbo_ratio"]["cz_squared"] == Json::array({9, 16}));
    CHECK(j["strong_viterbo"] == "holds");
    CHECK(j["viterbo"] == "holds");

    // A weakly convex domain outside every exactly-solved class gets a
    // genuine interval, serialized with lo/hi endpoints.
    bool found_interval = false;
    for (std::uint64_t seed = 1; seed <= 30 && !found_interval; ++seed) {
        const CapacityReport rep = viterbo_report(random_weakly_convex_polygon(seed, 6));
        if (rep.c_gr && !rep.c_gr->exact()) {
            const Json ij = capacity_report_to_json(rep);
            CHECK(ij["c_gr"]["lo"] == rational_to_json(rep.c_gr->lo));
            CHECK(ij["c_gr"]["hi"] == rational_to_json(rep.c_gr->hi));
            found_interval = true;
        }
    }
    CHECK(found_interval);
}

TEST_CASE("orbit and embed verdict JSON") {
    const auto orbits = enumerate_orbits(make_Xa(rat(1, 4)), 3);
    const Json axis = orbit_to_json(orbits[0]);
    CHECK(axis["kind"] == "axis_1");
    CHECK(axis["normal"].is_null());
    CHECK(axis["action"] == Json::array({1, 2}));
    CHECK(axis["rotation_number"] == Json::array({0, 1}));
    const Json family = orbit_to_json(orbits[3]);
    CHECK(family["kind"] == "torus_family");
    CHECK(family["normal"] == Json::array({1, 1}));
    CHECK(family["location"] == Json::array({Json::array({1, 2}), Json::array({1, 2})}));

    const EmbedVerdict blocked = check_concave_into_weakly_convex(
        make_simplex(rat(5, 8)), make_Xa(rat(3, 8)), 50);
    const Json bj = embed_verdict_to_json(blocked);
    CHECK(bj["status"] == "obstructed");
    CHECK(bj["checked_up_to"] == 0);
    CHECK(bj["obstruction_index"] == 1);
    CHECK(bj["obstruction_values"]["source"] == Json::array({5, 8}));
    CHECK(bj["obstruction_values"]["target"] == Json::array({1, 2}));

    const EmbedVerdict open_verdict = check_concave_into_weakly_convex(
        make_ellipsoid(1, 2), make_polydisk(1, 1), 10);
    const Json oj = embed_verdict_to_json(open_verdict);
    CHECK(oj["status"] == "verified_up_to");
    CHECK(oj["obstruction_index"].is_null());
    CHECK(oj["obstruction_values"].is_null());
}

TEST_CASE("CSV emitters are canonical and carry header rows") {
    std::vector<Rational> caps;
    for (std::int64_t k = 0; k <= 6; ++k) caps.push_back(ball_capacity(k, 1));
    CHECK(capacity_table_csv(caps) ==
          "k,numerator,denominator\n0,0,1\n1,1,1\n2,1,1\n3,2,1\n4,2,1\n5,2,1\n6,3,1\n");

    const auto orbits = enumerate_orbits(make_Xa(rat(1, 4)), 3);
    const std::string table = orbits_csv(orbits);
    CHECK(table.substr(0, table.find('\n')) == "kind,mu1,mu2,nu1,nu2,action,rho");
    CHECK(table.find("axis_1,1/2,0,,,1/2,0\n") != std::string::npos);
    CHECK(table.find("torus_family,1/2,1/2,1,1,1,2\n") != std::string::npos);

    CHECK(scan_csv_header() == "a,c_gr,c_z,vol,strong_viterbo,viterbo\n");
    CHECK(scan_csv_row(rat(1, 4), viterbo_report(make_Xa(rat(1, 4)))) ==
          "1/4,3/4,3/4,3/8,holds,holds\n");
    CHECK(scan_csv_row(rat(2, 5), viterbo_report(make_Xa(rat(2, 5)))) ==
          "2/5,2/5,3/5,9/50,fails,holds\n");
}

TEST_CASE("SVG output is deterministic and marked non-canonical") {
    const MomentPolygon omega = make_lp_ball(rat(1, 2), 8);
    const WeightSequence ws = weight_sequence(omega);
    const std::string svg = decomposition_svg(omega, ws);
    CHECK(svg == decomposition_svg(omega, ws));
    CHECK(svg.find("<svg xmlns") != std::string::npos);
    CHECK(svg.find("non-canonical") != std::string::npos);
    std::size_t polygons = 0;
    for (std::size_t pos = svg.find("<polygon"); pos != std::string::npos;
         pos = svg.find("<polygon", pos + 1))
        ++polygons;
    CHECK(polygons == ws.triangles.size() + 1);  // triangles plus the outline

    std::vector<Rational> caps;
    for (std::int64_t k = 0; k <= 12; ++k) caps.push_back(ball_capacity(k, 1));
    const std::string plot = capacity_plot_svg(caps, "ball:1");
    CHECK(plot == capacity_plot_svg(caps, "ball:1"));
    CHECK(plot.find("non-canonical") != std::string::npos);
    std::size_t dots = 0;
    for (std::size_t pos = plot.find("<circle"); pos != std::string::npos;
         pos = plot.find("<circle", pos + 1))
        ++dots;
    CHECK(dots == caps.size());
}
