#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "symcap/domain.hpp"
#include "symcap/embed.hpp"
#include "symcap/normalized.hpp"
#include "symcap/reeb.hpp"
#include "symcap/weights.hpp"

namespace symcap {

// Serialization layer. All JSON output goes through ordered_json so field
// order is insertion order and identical inputs dump to identical bytes.
// Rationals serialize as [numerator, denominator] pairs in canonical form
// (reduced, denominator positive); components must fit in 64 bits, which
// every quantity in scope does by a wide margin. CSV files carry a header
// row; rational CSV cells are canonical "p" or "p/q" strings unless a
// column pair is specified (capacity tables use numerator/denominator
// columns). SVG is the only floating-point surface and says so in its
// <desc> element.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
// `field` names the JSON location in ParseError diagnostics.
Rational rational_from_json(const Json& j, const std::string& field);

Json point_to_json(const Point2& p);

Json polygon_to_json(const MomentPolygon& omega);
MomentPolygon polygon_from_json(const Json& j);
HPolytope hpolytope_from_json(const Json& j);

// A parsed CLI domain argument: either a named family ("xa:3/8",
// "ellipsoid:1,2", ...; see parse_domain_spec) or a path to a JSON file in
// the domain schema. Planar domains land in `polygon`; an "hpolytope" JSON
// object lands in `hpolytope` and supports only the operations that are
// exact for H-polytopes. L-shape specs keep the exact arm data alongside
// the polygon.
struct DomainInput {
    std::string spec;
    std::optional<MomentPolygon> polygon;
    std::optional<HPolytope> hpolytope;
    std::optional<LShape> lshape;
};

// Accepted family specs, with rationals as "p/q":
//   simplex:r          ball:r (alias)     xa:a
//   ellipsoid:a,b      polydisk:a,b       lshape:a1,a2[,box]
//   lp:p[,samples]
// Anything without a colon is read as a JSON file path. Throws ParseError
// with a diagnostic naming the offending field or token.
DomainInput parse_domain_spec(const std::string& spec);
DomainInput domain_from_json(const Json& j, const std::string& origin);

// Report serializers. Absent optional quantities serialize as null.
Json classification_to_json(const DomainInput& input);
Json weight_sequence_to_json(const WeightSequence& ws);
Json capacity_report_to_json(const CapacityReport& rep);
Json orbit_to_json(const ReebOrbitInfo& orbit);
Json embed_verdict_to_json(const EmbedVerdict& verdict);

std::string capacity_table_csv(const std::vector<Rational>& caps);
std::string orbits_csv(const std::vector<ReebOrbitInfo>& orbits);
std::string scan_csv_header();
std::string scan_csv_row(const Rational& a, const CapacityReport& rep);

// Figure of Omega with its weight-triangle decomposition, triangles colored
// by recursion depth. Coordinates are floating point (non-canonical).
std::string decomposition_svg(const MomentPolygon& omega, const WeightSequence& ws);
// Staircase plot of c_0 .. c_kmax.
std::string capacity_plot_svg(const std::vector<Rational>& caps, const std::string& label);

}  // namespace symcap
