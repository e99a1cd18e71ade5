#include "symcap/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "symcap/catalog.hpp"
#include "symcap/errors.hpp"

namespace symcap {

namespace {

std::int64_t to_i64(const Int& n, const std::string& what) {
    static const Int lo{std::numeric_limits<std::int64_t>::min()};
    static const Int hi{std::numeric_limits<std::int64_t>::max()};
    if (n < lo || n > hi)
        throw Error(what + " exceeds the 64-bit serialization range");
    return n.convert_to<std::int64_t>();
}

std::int64_t int_from_json(const Json& j, const std::string& field) {
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw ParseError(field + ": integer out of 64-bit range");
        return static_cast<std::int64_t>(u);
    }
    if (!j.is_number_integer())
        throw ParseError(field + ": expected an integer");
    return j.get<std::int64_t>();
}

Json interval_to_json(const RatInterval& iv) {
    if (iv.exact()) return rational_to_json(iv.lo);
    Json j = Json::object();
    j["lo"] = rational_to_json(iv.lo);
    j["hi"] = rational_to_json(iv.hi);
    return j;
}

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v + 0.0);
    return buf;
}

}  // namespace

Json rational_to_json(const Rational& q) {
    return Json::array({to_i64(numerator(q), "numerator"), to_i64(denominator(q), "denominator")});
}

Rational rational_from_json(const Json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(field + ": expected a [numerator, denominator] pair");
    const std::int64_t num = int_from_json(j[0], field + "[0]");
    const std::int64_t den = int_from_json(j[1], field + "[1]");
    if (den <= 0) throw ParseError(field + ": denominator must be positive");
    return Rational(Int(num), Int(den));
}

Json point_to_json(const Point2& p) {
    return Json::array({rational_to_json(p.x), rational_to_json(p.y)});
}

namespace {

Point2 point_from_json(const Json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(field + ": expected a point as [x, y]");
    return {rational_from_json(j[0], field + ".x"), rational_from_json(j[1], field + ".y")};
}

}  // namespace

Json polygon_to_json(const MomentPolygon& omega) {
    Json j = Json::object();
    j["type"] = "polygon";
    Json chain = Json::array();
    for (const Point2& v : omega.chain()) chain.push_back(point_to_json(v));
    j["boundary_plus"] = std::move(chain);
    return j;
}

MomentPolygon polygon_from_json(const Json& j) {
    const auto it = j.find("boundary_plus");
    if (it == j.end() || !it->is_array())
        throw ParseError("boundary_plus: required point array is missing");
    std::vector<Point2> chain;
    chain.reserve(it->size());
    for (std::size_t i = 0; i < it->size(); ++i)
        chain.push_back(point_from_json((*it)[i], "boundary_plus[" + std::to_string(i) + "]"));
    return MomentPolygon(std::move(chain));
}

HPolytope hpolytope_from_json(const Json& j) {
    const auto ita = j.find("A");
    const auto itb = j.find("b");
    if (ita == j.end() || !ita->is_array())
        throw ParseError("A: required constraint-row array is missing");
    if (itb == j.end() || !itb->is_array())
        throw ParseError("b: required bound array is missing");
    std::vector<std::vector<Rational>> rows;
    rows.reserve(ita->size());
    for (std::size_t i = 0; i < ita->size(); ++i) {
        const Json& row = (*ita)[i];
        const std::string fr = "A[" + std::to_string(i) + "]";
        if (!row.is_array()) throw ParseError(fr + ": expected a row of rationals");
        std::vector<Rational> r;
        r.reserve(row.size());
        for (std::size_t c = 0; c < row.size(); ++c)
            r.push_back(rational_from_json(row[c], fr + "[" + std::to_string(c) + "]"));
        rows.push_back(std::move(r));
    }
    std::vector<Rational> b;
    b.reserve(itb->size());
    for (std::size_t i = 0; i < itb->size(); ++i)
        b.push_back(rational_from_json((*itb)[i], "b[" + std::to_string(i) + "]"));
    return HPolytope(std::move(rows), std::move(b));
}

namespace {

Rational field_rational(const Json& j, const std::string& field) {
    const auto it = j.find(field);
    if (it == j.end()) throw ParseError(field + ": required rational is missing");
    return rational_from_json(*it, field);
}

std::int64_t positive_int_token(const std::string& token, const std::string& what) {
    const Rational q = parse_rational(token);
    if (denominator(q) != 1 || q <= 0)
        throw ParseError(what + ": expected a positive integer, got '" + token + "'");
    return to_i64(numerator(q), what);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

DomainInput family_from_parts(const std::string& spec, const std::string& name,
                              const std::vector<Rational>& args,
                              const std::vector<std::string>& tokens) {
    DomainInput input;
    input.spec = spec;
    const auto require = [&](std::size_t lo, std::size_t hi, const char* usage) {
        if (args.size() < lo || args.size() > hi)
            throw ParseError(name + ": expected " + usage + ", got " +
                             std::to_string(args.size()) + " parameter(s)");
    };
    if (name == "simplex" || name == "ball") {
        require(1, 1, "one parameter r");
        input.polygon = make_simplex(args[0]);
    } else if (name == "xa") {
        require(1, 1, "one parameter a");
        input.polygon = make_Xa(args[0]);
    } else if (name == "ellipsoid") {
        require(2, 2, "two parameters a,b");
        input.polygon = make_ellipsoid(args[0], args[1]);
    } else if (name == "polydisk") {
        require(2, 2, "two parameters a,b");
        input.polygon = make_polydisk(args[0], args[1]);
    } else if (name == "lshape") {
        require(2, 3, "arm widths a1,a2 and an optional box side");
        std::vector<Rational> arms{args[0], args[1]};
        input.lshape = args.size() == 3 ? LShape(std::move(arms), args[2])
                                        : make_Lshape(std::move(arms));
        input.polygon = lshape_polygon(*input.lshape);
    } else if (name == "lp") {
        require(1, 2, "an exponent p and an optional sample count");
        int samples = 32;
        if (args.size() == 2) {
            const std::int64_t n = positive_int_token(tokens[1], name + " samples");
            if (n < 2 || n > 4096) throw ParseError(name + ": sample count out of range [2, 4096]");
            samples = static_cast<int>(n);
        }
        input.polygon = make_lp_ball(args[0], samples);
    } else {
        throw ParseError("unknown family '" + name +
                         "' (expected simplex, ball, xa, ellipsoid, polydisk, lshape, or lp)");
    }
    return input;
}

}  // namespace

DomainInput domain_from_json(const Json& j, const std::string& origin) {
    if (!j.is_object()) throw ParseError(origin + ": domain must be a JSON object");
    const auto it = j.find("type");
    if (it == j.end() || !it->is_string())
        throw ParseError("type: required domain type string is missing");
    const std::string type = it->get<std::string>();

    DomainInput input;
    input.spec = origin;
    if (type == "polygon") {
        input.polygon = polygon_from_json(j);
    } else if (type == "hpolytope") {
        input.hpolytope = hpolytope_from_json(j);
    } else if (type == "simplex" || type == "ball") {
        input.polygon = make_simplex(field_rational(j, "r"));
    } else if (type == "xa") {
        input.polygon = make_Xa(field_rational(j, "a"));
    } else if (type == "ellipsoid") {
        input.polygon = make_ellipsoid(field_rational(j, "a"), field_rational(j, "b"));
    } else if (type == "polydisk") {
        input.polygon = make_polydisk(field_rational(j, "a"), field_rational(j, "b"));
    } else if (type == "lshape") {
        const auto ia = j.find("a");
        if (ia == j.end() || !ia->is_array())
            throw ParseError("a: required arm-width array is missing");
        std::vector<Rational> arms;
        for (std::size_t i = 0; i < ia->size(); ++i)
            arms.push_back(rational_from_json((*ia)[i], "a[" + std::to_string(i) + "]"));
        input.lshape = j.contains("box") ? LShape(std::move(arms), field_rational(j, "box"))
                                         : make_Lshape(std::move(arms));
        if (input.lshape->dim() == 2) input.polygon = lshape_polygon(*input.lshape);
    } else if (type == "lp") {
        int samples = 32;
        if (j.contains("samples")) {
            const std::int64_t n = int_from_json(j["samples"], "samples");
            if (n < 2 || n > 4096) throw ParseError("samples: out of range [2, 4096]");
            samples = static_cast<int>(n);
        }
        input.polygon = make_lp_ball(field_rational(j, "p"), samples);
    } else {
        throw ParseError("type: unknown domain type '" + type + "'");
    }
    return input;
}

DomainInput parse_domain_spec(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) {
        std::ifstream in(spec);
        if (!in) throw ParseError("cannot open domain file '" + spec + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw ParseError("malformed JSON in '" + spec + "': " + e.what());
        }
        return domain_from_json(j, spec);
    }

    const std::string name = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (rest.empty()) throw ParseError(name + ": missing parameters after ':'");
    const std::vector<std::string> tokens = split(rest, ',');
    std::vector<Rational> args;
    args.reserve(tokens.size());
    for (const std::string& t : tokens) args.push_back(parse_rational(t));
    return family_from_parts(spec, name, args, tokens);
}

Json classification_to_json(const DomainInput& input) {
    Json j = Json::object();
    j["domain"] = input.spec;
    if (input.polygon) {
        const MomentPolygon& omega = *input.polygon;
        const DomainClass cls = classify(omega);
        j["type"] = "polygon";
        j["star_shaped"] = cls.star_shaped;
        j["monotone"] = cls.monotone;
        j["strictly_monotone"] = cls.strictly_monotone;
        j["concave"] = cls.concave;
        j["convex_toric"] = cls.convex_toric;
        j["weakly_convex"] = cls.weakly_convex;
        j["convex_in_R4"] = cls.convex_in_R4;
        j["A"] = rational_to_json(omega.A());
        j["B"] = rational_to_json(omega.B());
        j["M1"] = rational_to_json(omega.M1());
        j["M2"] = rational_to_json(omega.M2());
        j["area"] = rational_to_json(omega.area());
        j["volume"] = rational_to_json(volume(omega));
    } else if (input.hpolytope) {
        const HPolytope& p = *input.hpolytope;
        j["type"] = "hpolytope";
        j["dim"] = p.dim();
        j["constraints"] = p.constraint_count();
        j["simplex_inradius"] = rational_to_json(simplex_inradius(p));
    }
    return j;
}

Json weight_sequence_to_json(const WeightSequence& ws) {
    Json j = Json::object();
    j["count"] = ws.weights.size();
    Json arr = Json::array();
    for (const Rational& w : ws.weights) arr.push_back(rational_to_json(w));
    j["weights"] = std::move(arr);
    j["sum_of_squares"] = rational_to_json(ws.sum_of_squares());
    int max_depth = 0;
    for (const PlacedTriangle& t : ws.triangles) max_depth = std::max(max_depth, t.depth);
    j["max_depth"] = max_depth;
    return j;
}

Json capacity_report_to_json(const CapacityReport& rep) {
    Json j = Json::object();
    j["c_gr"] = rep.c_gr ? interval_to_json(*rep.c_gr) : Json(nullptr);
    j["c_z"] = rep.c_z ? interval_to_json(*rep.c_z) : Json(nullptr);
    j["c1_ch"] = rep.c1_ch ? rational_to_json(*rep.c1_ch) : Json(nullptr);
    j["c1_ech"] = rep.c1_ech ? rational_to_json(*rep.c1_ech) : Json(nullptr);
    j["volume"] = rational_to_json(rep.volume);
    if (rep.viterbo_ratio) {
        Json vr = Json::object();
        vr["cz_squared"] = rational_to_json(rep.viterbo_ratio->first);
        vr["two_vol"] = rational_to_json(rep.viterbo_ratio->second);
        j["viterbo_ratio"] = std::move(vr);
    } else {
        j["viterbo_ratio"] = nullptr;
    }
    j["strong_viterbo"] = to_string(rep.strong_viterbo);
    j["viterbo"] = to_string(rep.viterbo);
    return j;
}

Json orbit_to_json(const ReebOrbitInfo& orbit) {
    Json j = Json::object();
    j["kind"] = to_string(orbit.kind);
    j["location"] = point_to_json(orbit.location);
    if (orbit.normal) {
        j["normal"] = Json::array({to_i64(orbit.normal->x, "normal.x"),
                                   to_i64(orbit.normal->y, "normal.y")});
    } else {
        j["normal"] = nullptr;
    }
    j["action"] = rational_to_json(orbit.action);
    j["rotation_number"] = rational_to_json(orbit.rotation_number);
    return j;
}

Json embed_verdict_to_json(const EmbedVerdict& verdict) {
    Json j = Json::object();
    j["status"] = to_string(verdict.status);
    j["checked_up_to"] = verdict.checked_up_to;
    j["obstruction_index"] =
        verdict.obstruction_index ? Json(*verdict.obstruction_index) : Json(nullptr);
    if (verdict.obstruction_values) {
        Json v = Json::object();
        v["source"] = rational_to_json(verdict.obstruction_values->first);
        v["target"] = rational_to_json(verdict.obstruction_values->second);
        j["obstruction_values"] = std::move(v);
    } else {
        j["obstruction_values"] = nullptr;
    }
    j["certificate"] = verdict.certificate;
    return j;
}

std::string capacity_table_csv(const std::vector<Rational>& caps) {
    std::ostringstream out;
    out << "k,numerator,denominator\n";
    for (std::size_t k = 0; k < caps.size(); ++k)
        out << k << ',' << numerator(caps[k]) << ',' << denominator(caps[k]) << '\n';
    return out.str();
}

std::string orbits_csv(const std::vector<ReebOrbitInfo>& orbits) {
    std::ostringstream out;
    out << "kind,mu1,mu2,nu1,nu2,action,rho\n";
    for (const ReebOrbitInfo& o : orbits) {
        out << to_string(o.kind) << ',' << to_string(o.location.x) << ','
            << to_string(o.location.y) << ',';
        if (o.normal)
            out << o.normal->x << ',' << o.normal->y;
        else
            out << ',';
        out << ',' << to_string(o.action) << ',' << to_string(o.rotation_number) << '\n';
    }
    return out.str();
}

std::string scan_csv_header() { return "a,c_gr,c_z,vol,strong_viterbo,viterbo\n"; }

std::string scan_csv_row(const Rational& a, const CapacityReport& rep) {
    // Scan rows are only emitted for families where both widths are exact.
    std::ostringstream out;
    out << to_string(a) << ',' << to_string(rep.c_gr->value()) << ','
        << to_string(rep.c_z->value()) << ',' << to_string(rep.volume) << ','
        << to_string(rep.strong_viterbo) << ',' << to_string(rep.viterbo) << '\n';
    return out.str();
}

namespace {

const char* kDepthPalette[8] = {"#4e79a7", "#f28e2b", "#59a45e", "#e15759",
                                "#b07aa1", "#edc948", "#76b7b2", "#9c755f"};

}  // namespace

std::string decomposition_svg(const MomentPolygon& omega, const WeightSequence& ws) {
    const double m1 = to_double(omega.M1());
    const double m2 = to_double(omega.M2());
    const double margin = 30.0;
    const double scale = 440.0 / std::max({m1, m2, 1e-9});
    const double width = 2 * margin + m1 * scale;
    const double height = 2 * margin + m2 * scale;
    const auto px = [&](const Rational& x) { return margin + to_double(x) * scale; };
    const auto py = [&](const Rational& y) { return height - margin - to_double(y) * scale; };
    const auto points = [&](const std::vector<Point2>& poly) {
        std::string s;
        for (const Point2& v : poly) {
            if (!s.empty()) s += ' ';
            s += fmt6(px(v.x)) + ',' + fmt6(py(v.y));
        }
        return s;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt6(width)
        << "\" height=\"" << fmt6(height) << "\" viewBox=\"0 0 " << fmt6(width) << ' '
        << fmt6(height) << "\">\n";
    out << "<desc>Weight-triangle decomposition; triangles colored by recursion depth. "
           "Coordinates are floating point and non-canonical; exact values live in the "
           "JSON output.</desc>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << fmt6(width) << "\" height=\"" << fmt6(height)
        << "\" fill=\"#ffffff\"/>\n";
    for (const PlacedTriangle& t : ws.triangles) {
        const auto corners = triangle_corners(t);
        out << "<polygon points=\""
            << points({corners[0], corners[1], corners[2]}) << "\" fill=\""
            << kDepthPalette[t.depth % 8]
            << "\" fill-opacity=\"0.85\" stroke=\"#1a1a1a\" stroke-width=\"0.7\"/>\n";
    }
    out << "<polygon points=\"" << points(omega.closed_polygon())
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.8\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string capacity_plot_svg(const std::vector<Rational>& caps, const std::string& label) {
    const double margin = 42.0;
    const double width = 560.0, height = 360.0;
    const std::size_t n = caps.size();
    double vmax = 1e-9;
    for (const Rational& c : caps) vmax = std::max(vmax, to_double(c));
    const double sx = (width - 2 * margin) / std::max<double>(1, n - 1);
    const double sy = (height - 2 * margin) / vmax;
    const auto px = [&](std::size_t k) { return margin + k * sx; };
    const auto py = [&](const Rational& v) { return height - margin - to_double(v) * sy; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt6(width)
        << "\" height=\"" << fmt6(height) << "\" viewBox=\"0 0 " << fmt6(width) << ' '
        << fmt6(height) << "\">\n";
    out << "<desc>Capacity staircase for " << label
        << ". Coordinates are floating point and non-canonical.</desc>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << fmt6(width) << "\" height=\"" << fmt6(height)
        << "\" fill=\"#ffffff\"/>\n";
    out << "<line x1=\"" << fmt6(margin) << "\" y1=\"" << fmt6(height - margin) << "\" x2=\""
        << fmt6(width - margin) << "\" y2=\"" << fmt6(height - margin)
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << fmt6(margin) << "\" y1=\"" << fmt6(height - margin) << "\" x2=\""
        << fmt6(margin) << "\" y2=\"" << fmt6(margin)
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    if (n > 1) {
        out << "<polyline points=\"";
        for (std::size_t k = 0; k < n; ++k) {
            if (k) out << ' ';
            out << fmt6(px(k)) << ',' << fmt6(py(caps[k]));
        }
        out << "\" fill=\"none\" stroke=\"#4e79a7\" stroke-width=\"1.4\"/>\n";
    }
    for (std::size_t k = 0; k < n; ++k)
        out << "<circle cx=\"" << fmt6(px(k)) << "\" cy=\"" << fmt6(py(caps[k]))
            << "\" r=\"2.4\" fill=\"#4e79a7\"/>\n";
    out << "<text x=\"" << fmt6(width - margin) << "\" y=\"" << fmt6(height - margin + 26)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
           "fill=\"#333333\">k</text>\n";
    out << "<text x=\"" << fmt6(margin - 26) << "\" y=\"" << fmt6(margin - 10)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">c_k</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace symcap
