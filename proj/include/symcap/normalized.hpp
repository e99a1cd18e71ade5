#pragma once

#include <optional>
#include <string>
#include <utility>

#include "symcap/domain.hpp"
#include "symcap/rational.hpp"

namespace symcap {

// First equivariant capacity of a concave domain: the exact minimum of
// mu_1 + ... + mu_n over the closure of the upper boundary.
Rational c1_ch_concave(const MomentPolygon& omega);
// Concave H-polytopes are single halfspace cuts {alpha . mu <= b} of the
// positive orthant; the minimum is b / max_j alpha_j.
Rational c1_ch_concave(const HPolytope& p);
// Truncated staircase L(a_1, ..., a_n): sum of the arm widths, provided the
// box does not cut below the corner (a_1, ..., a_n).
Rational c1_ch_concave(const LShape& l);

// For monotone domains the first equivariant capacity, the Gromov width and
// (in dimension four) the cylindrical capacity all equal the size of the
// largest simplex Delta^n(a) inside Omega.
Rational c1_ch_monotone(const MomentPolygon& omega);
Rational c1_ch_monotone(const HPolytope& p);
Rational gromov_width_monotone_4d(const MomentPolygon& omega);
Rational cylindrical_capacity_monotone_4d(const MomentPolygon& omega);

// Cylindrical capacity of a weakly convex domain: min(M_1, M_2) with
// M_j = max of mu_j over Omega, valid when the upper boundary reaches
// (M_1, mu_2) with mu_2 <= M_1 and (mu_1, M_2) with mu_1 <= M_2. Throws
// HypothesisError naming the failing side(s) otherwise.
Rational cylindrical_capacity_weakly_convex(const MomentPolygon& omega);

// Largest diamond {|mu_1 - c_1| + |mu_2 - c_2| <= delta} inside a weakly
// convex Omega subject to delta <= c_1, c_2; the open ball B(2 delta) then
// embeds symplectically. Solved as an exact three-variable LP by vertex
// enumeration. Returns nothing when no positive diamond fits.
struct DiamondCertificate {
    Rational center_x;
    Rational center_y;
    Rational half_diagonal;

    Rational ball() const { return 2 * half_diagonal; }
};
std::optional<DiamondCertificate> best_diamond(const MomentPolygon& omega);

// Gromov width of X_a for 0 < a < 1/2: min(1-a, 2-4a). Cross-checked
// against the first ECH capacity of the same domain.
Rational gromov_width_Xa(const Rational& a);

enum class TriState { Holds, Fails, Unknown };
std::string to_string(TriState t);

// Exact capacity summary of a domain. Quantities the theorems pin down are
// single rationals (exact intervals); the rest are enclosing intervals or
// absent. viterbo_ratio stores (c_z^2, 2 vol) so the inequality c_z^2 <=
// 2 vol is checked without square roots.
struct CapacityReport {
    std::optional<RatInterval> c_gr;
    std::optional<RatInterval> c_z;
    std::optional<Rational> c1_ch;
    std::optional<Rational> c1_ech;
    Rational volume = 0;
    std::optional<std::pair<Rational, Rational>> viterbo_ratio;
    TriState strong_viterbo = TriState::Unknown;
    TriState viterbo = TriState::Unknown;
};

CapacityReport viterbo_report(const MomentPolygon& omega);

}  // namespace symcap
