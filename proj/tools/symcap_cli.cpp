// symcap: exact symplectic capacities of toric domains.
//
// Exit codes: 0 ok (or embedding not obstructed), 2 malformed input,
// 3 embedding obstructed, 4 operation outside the exact class of the domain.
// All JSON output is exact rationals as [numerator, denominator]; SVG files
// are the only floating-point surface. Identical invocations produce
// byte-identical JSON/CSV.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "symcap/catalog.hpp"
#include "symcap/ech.hpp"
#include "symcap/errors.hpp"
#include "symcap/io.hpp"

namespace {

using symcap::CapacityReport;
using symcap::DomainInput;
using symcap::Json;
using symcap::MomentPolygon;
using symcap::Rational;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw symcap::Error("cannot write '" + path + "'");
    out << content;
}

const MomentPolygon& planar(const DomainInput& input, const char* op) {
    if (!input.polygon)
        throw symcap::ClassMismatchError(std::string(op) + " requires a planar profile");
    return *input.polygon;
}

// Largest corner simplex inside a star-shaped profile: the minimal vertex
// sum over the boundary chain. Used for the default orbit action cap.
Rational simplex_inradius_2d(const MomentPolygon& omega) {
    Rational r = omega.chain().front().x + omega.chain().front().y;
    for (const symcap::Point2& v : omega.chain()) r = std::min(r, Rational(v.x + v.y));
    return r;
}

int run_classify(const std::string& spec) {
    emit(symcap::classification_to_json(symcap::parse_domain_spec(spec)));
    return 0;
}

int run_caps(const std::string& spec, std::int64_t k_max, bool csv, const std::string& svg) {
    if (k_max < 0) throw symcap::RangeError("--k-max must be nonnegative");
    const DomainInput input = symcap::parse_domain_spec(spec);

    if (input.hpolytope) {
        if (csv || !svg.empty())
            throw symcap::ClassMismatchError("the ECH capacity table requires a planar profile");
        Json j = Json::object();
        j["domain"] = input.spec;
        j["c1_ch"] = symcap::rational_to_json(symcap::c1_ch_monotone(*input.hpolytope));
        j["simplex_inradius"] =
            symcap::rational_to_json(symcap::simplex_inradius(*input.hpolytope));
        emit(j);
        return 0;
    }

    const MomentPolygon& omega = planar(input, "caps");
    std::vector<Rational> table;
    std::string table_error;
    try {
        const auto seq = symcap::capacity_sequence_for(omega);
        table.reserve(static_cast<std::size_t>(k_max) + 1);
        for (std::int64_t k = 0; k <= k_max; ++k) table.push_back(seq->at(k));
    } catch (const symcap::ClassMismatchError& e) {
        // The normalized capacities below may still apply; the CSV and SVG
        // surfaces are the table itself, so for those the mismatch is fatal.
        if (csv || !svg.empty()) throw;
        table_error = e.what();
    }

    if (csv) {
        std::cout << symcap::capacity_table_csv(table);
        return 0;
    }
    if (!svg.empty()) write_file(svg, symcap::capacity_plot_svg(table, input.spec));

    Json j = Json::object();
    j["domain"] = input.spec;
    j["k_max"] = k_max;
    if (table_error.empty()) {
        Json arr = Json::array();
        for (const Rational& c : table) arr.push_back(symcap::rational_to_json(c));
        j["c_ech"] = std::move(arr);
    } else {
        j["c_ech"] = nullptr;
        j["c_ech_unavailable"] = table_error;
    }
    const Json body = symcap::capacity_report_to_json(symcap::viterbo_report(omega));
    for (const auto& [key, value] : body.items()) j[key] = value;
    emit(j);
    return 0;
}

int run_weights(const std::string& spec, const std::string& svg) {
    const DomainInput input = symcap::parse_domain_spec(spec);
    const MomentPolygon& omega = planar(input, "weight expansion");
    const symcap::WeightSequence ws = symcap::weight_sequence(omega);
    if (!svg.empty()) write_file(svg, symcap::decomposition_svg(omega, ws));
    Json j = Json::object();
    j["domain"] = input.spec;
    const Json body = symcap::weight_sequence_to_json(ws);
    for (const auto& [key, value] : body.items()) j[key] = value;
    emit(j);
    return 0;
}

int run_orbits(const std::string& spec, const std::string& cap_text, bool csv) {
    const DomainInput input = symcap::parse_domain_spec(spec);
    const MomentPolygon& omega = planar(input, "orbit enumeration");
    Rational cap;
    if (cap_text.empty()) {
        cap = 3 * simplex_inradius_2d(omega);
    } else {
        cap = symcap::parse_rational(cap_text);
        if (cap <= 0) throw symcap::RangeError("--action-cap must be positive");
    }
    const auto orbits = symcap::enumerate_orbits(omega, cap);
    if (csv) {
        std::cout << symcap::orbits_csv(orbits);
        return 0;
    }
    const auto verdict = symcap::is_dynamically_convex(omega);
    Json j = Json::object();
    j["domain"] = input.spec;
    j["action_cap"] = symcap::rational_to_json(cap);
    j["a_min"] = symcap::rational_to_json(symcap::a_min(omega));
    Json arr = Json::array();
    for (const auto& o : orbits) arr.push_back(symcap::orbit_to_json(o));
    j["orbits"] = std::move(arr);
    j["dynamically_convex"] = verdict.dynamically_convex;
    j["witness"] = verdict.witness ? symcap::orbit_to_json(*verdict.witness) : Json(nullptr);
    j["note"] =
        "torus families are reported at edge midpoints; axis rotation numbers "
        "use the slope of the incident chain edge";
    emit(j);
    return 0;
}

int run_embed(const std::string& src_spec, const std::string& tgt_spec, std::int64_t k_max) {
    const DomainInput src = symcap::parse_domain_spec(src_spec);
    const DomainInput tgt = symcap::parse_domain_spec(tgt_spec);
    const auto verdict = symcap::check_concave_into_weakly_convex(
        planar(src, "embedding check"), planar(tgt, "embedding check"), k_max,
        symcap::Exec::Parallel);
    Json j = Json::object();
    j["source"] = src.spec;
    j["target"] = tgt.spec;
    j["k_max"] = k_max;
    const Json body = symcap::embed_verdict_to_json(verdict);
    for (const auto& [key, value] : body.items()) j[key] = value;
    emit(j);
    return verdict.status == symcap::EmbedStatus::Obstructed ? 3 : 0;
}

int run_family(const std::string& name, const std::string& a_text) {
    if (name != "xa")
        throw symcap::ParseError("unknown family '" + name + "' (only xa has a family report)");
    const Rational a = symcap::parse_rational(a_text);
    const CapacityReport rep = symcap::viterbo_report(symcap::make_Xa(a));
    Json j = Json::object();
    j["family"] = "xa";
    j["a"] = symcap::rational_to_json(a);
    const Json body = symcap::capacity_report_to_json(rep);
    for (const auto& [key, value] : body.items()) j[key] = value;
    emit(j);
    return 0;
}

int run_scan(const std::string& name, const std::string& from_text, const std::string& to_text,
             const std::string& step_text) {
    if (name != "xa")
        throw symcap::ParseError("unknown family '" + name + "' (only xa can be scanned)");
    const Rational from = symcap::parse_rational(from_text);
    const Rational to = symcap::parse_rational(to_text);
    const Rational step = symcap::parse_rational(step_text);
    if (step <= 0) throw symcap::RangeError("--step must be positive");
    if (!(from > 0 && to < Rational(1, 2) && from <= to))
        throw symcap::RangeError("scan range must satisfy 0 < from <= to < 1/2");

    std::vector<Rational> grid;
    for (Rational a = from; a <= to; a += step) grid.push_back(a);

    // Reports are independent per grid point; the row order is fixed by the
    // grid, so the schedule cannot change the output.
    std::vector<CapacityReport> reports(grid.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(grid.size()); ++i) {
        try {
            reports[static_cast<std::size_t>(i)] =
                symcap::viterbo_report(symcap::make_Xa(grid[static_cast<std::size_t>(i)]));
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::cout << symcap::scan_csv_header();
    for (std::size_t i = 0; i < grid.size(); ++i)
        std::cout << symcap::scan_csv_row(grid[i], reports[i]);
    return 0;
}

int run_zk_ratio(std::int64_t k) {
    if (k < 3) throw symcap::RangeError("zk-ratio needs k >= 3");
    const double pi = std::acos(-1.0);
    const double ratio = (static_cast<double>(k) / pi) * std::tan(pi / static_cast<double>(k));
    Json j = Json::object();
    j["k"] = k;
    j["ratio"] = ratio;
    j["approximate"] = true;
    j["note"] = "closed form (k/pi) tan(pi/k); floating point, non-canonical";
    emit(j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "symcap: exact symplectic capacities, classifications, Reeb orbits, and\n"
        "embedding verdicts for toric domains.\n\n"
        "Domains: simplex:r, ball:r, xa:a, ellipsoid:a,b, polydisk:a,b,\n"
        "lshape:a1,a2[,box], lp:p[,samples], or a path to a domain JSON file.\n"
        "Rationals are written p/q."};
    app.require_subcommand(1);

    std::string domain, source, target, family_name, a_text, svg_path, cap_text;
    std::string from_text, to_text, step_text;
    std::int64_t k_max_caps = 20, k_max_embed = 200, zk = 0;
    bool csv = false;

    auto* cmd_classify = app.add_subcommand("classify", "Classification flags of a domain");
    cmd_classify->add_option("domain", domain, "Domain spec or JSON file")->required();

    auto* cmd_caps = app.add_subcommand("caps", "Capacity table and normalized capacities");
    cmd_caps->add_option("domain", domain, "Domain spec or JSON file")->required();
    cmd_caps->add_option("--k-max", k_max_caps, "Largest ECH index (default 20)");
    cmd_caps->add_flag("--csv", csv, "Emit the ECH table as CSV (k,numerator,denominator)");
    cmd_caps->add_option("--svg", svg_path, "Write a capacity staircase plot to this file");

    auto* cmd_weights = app.add_subcommand("weights", "Weight expansion of a concave domain");
    cmd_weights->add_option("domain", domain, "Domain spec or JSON file")->required();
    cmd_weights->add_option("--svg", svg_path, "Write the decomposition figure to this file");

    auto* cmd_orbits = app.add_subcommand("orbits", "Reeb orbits and dynamical convexity");
    cmd_orbits->add_option("domain", domain, "Domain spec or JSON file")->required();
    cmd_orbits->add_option("--action-cap", cap_text,
                           "Action cutoff p/q (default: 3x the inscribed-simplex size)");
    cmd_orbits->add_flag("--csv", csv, "Emit the orbit table as CSV");

    auto* cmd_embed = app.add_subcommand("embed", "Obstruction check: concave into weakly convex");
    cmd_embed->add_option("source", source, "Source domain (concave)")->required();
    cmd_embed->add_option("target", target, "Target domain (weakly convex)")->required();
    cmd_embed->add_option("--k-max", k_max_embed, "Largest index checked (default 200)");

    auto* cmd_family = app.add_subcommand("family", "Closed-form capacity report for a family");
    cmd_family->add_option("name", family_name, "Family name (xa)")->required();
    cmd_family->add_option("--a", a_text, "Family parameter p/q")->required();

    auto* cmd_scan = app.add_subcommand("scan", "Capacity scan over a family parameter grid");
    cmd_scan->add_option("name", family_name, "Family name (xa)")->required();
    cmd_scan->add_option("--from", from_text, "First parameter p/q")->required();
    cmd_scan->add_option("--to", to_text, "Last parameter p/q")->required();
    cmd_scan->add_option("--step", step_text, "Grid step p/q")->required();

    auto* cmd_zk = app.add_subcommand("zk-ratio", "(k/pi) tan(pi/k), the Z/k capacity ratio bound");
    cmd_zk->add_option("k", zk, "Cyclic group order, k >= 3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_classify->parsed()) return run_classify(domain);
        if (cmd_caps->parsed()) return run_caps(domain, k_max_caps, csv, svg_path);
        if (cmd_weights->parsed()) return run_weights(domain, svg_path);
        if (cmd_orbits->parsed()) return run_orbits(domain, cap_text, csv);
        if (cmd_embed->parsed()) return run_embed(source, target, k_max_embed);
        if (cmd_family->parsed()) return run_family(family_name, a_text);
        if (cmd_scan->parsed()) return run_scan(family_name, from_text, to_text, step_text);
        if (cmd_zk->parsed()) return run_zk_ratio(zk);
    } catch (const symcap::ClassMismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const symcap::HypothesisError& e) {
        std::cerr << "error: " << e.what() << " (failed side: " << e.failed_side << ")\n";
        return 4;
    } catch (const symcap::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const symcap::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const symcap::RangeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
