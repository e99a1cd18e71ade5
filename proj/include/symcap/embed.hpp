#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcap/domain.hpp"
#include "symcap/ech.hpp"
#include "symcap/weights.hpp"

namespace symcap {

// Embedding decisions by capacity comparison. For a concave source and a
// weakly convex target, int(X_src) embeds symplectically into X_tgt exactly
// when c_k(src) <= c_k(tgt) for every k >= 0. A finite run can only check
// k <= K, so a verdict is one of:
//
//   embeds            every k <= K passed and a tail bound certifies the
//                     remaining k > K (see check_concave_into_weakly_convex)
//   obstructed        some k <= K has c_k(src) > c_k(tgt); the first such k
//                     and both exact values are recorded
//   verified_up_to    every k <= K passed but the tail is not certified;
//                     no full embedding claim is made

enum class EmbedStatus { Embeds, Obstructed, VerifiedUpTo };

std::string to_string(EmbedStatus status);

struct EmbedVerdict {
    EmbedStatus status = EmbedStatus::VerifiedUpTo;
    // Largest k whose comparison was verified to pass.
    std::int64_t checked_up_to = 0;
    // First k with c_k(src) > c_k(tgt), when obstructed.
    std::optional<std::int64_t> obstruction_index;
    // The exact pair (c_k(src), c_k(tgt)) at the obstruction index.
    std::optional<std::pair<Rational, Rational>> obstruction_values;
    // Human-readable tail-bound note; non-empty exactly when status is
    // embeds.
    std::string certificate;
};

// Compare exact capacity sequences for k = 0..k_max. If all comparisons
// pass, the verdict upgrades to embeds when the tail closes: with S the sum
// of squared source weights, r the target's enclosing simplex size and s^2
// its summed inner weight squares,
//
//   c_k(src) <= sqrt(2kS)   and   c_k(tgt) >= sqrt(2k(r^2 - s^2)) - 3r/2,
//
// so 4(k_max+1)(sqrt(2(r^2-s^2)) - sqrt(2S))^2 >= 9r^2 (checked through
// rational root brackets) forces c_k(src) <= c_k(tgt) for every k > k_max.
EmbedVerdict check_concave_into_weakly_convex(const MomentPolygon& src,
                                              const MomentPolygon& tgt,
                                              std::int64_t k_max,
                                              Exec exec = Exec::Serial);

// Same contract against the rectangle profile of the polydisk P(r, R).
EmbedVerdict check_concave_into_polydisk(const MomentPolygon& src, const Rational& r,
                                         const Rational& R, std::int64_t k_max,
                                         Exec exec = Exec::Serial);

// Corners of a placed corner triangle: the images of (0,0), (size,0),
// (0,size) under the placement.
std::array<Point2, 3> triangle_corners(const PlacedTriangle& t);

struct DiamondDatum {
    Point2 center;
    Rational half_diagonal;
    // center +- (h,0), center +- (0,h).
    std::array<Point2, 4> corners() const;
};

// The geometric datum behind the optimal ball embedding into X_{Omega_a}.
// For a <= 1/3: five corner triangles packed into Delta^2(1) with disjoint
// interiors, one of size 1-a and four of size a, realizing
// B(1-a) u 4*B(a) -> B(1). For a >= 1/3: the diamond inscribed in Omega_a
// with center (a,a) and half-diagonal 1-2a, into which B(2-4a) embeds by
// the diamond lemma (cited, not re-verified by capacities: the diamond is
// not a toric profile, so its capacities are outside this code's formulas).
// At a = 1/3 both data are produced and describe the same width 2/3.
struct XaPackingCertificate {
    Rational a;
    Rational ball;  // min(1-a, 2-4a)
    std::optional<std::vector<PlacedTriangle>> triangles;
    std::optional<DiamondDatum> diamond;
    std::string note;
};

// Throws RangeError unless 0 < a < 1/2. The returned placements are
// self-checked: triangle corners inside Delta^2(1) and pairwise disjoint
// interiors; diamond corners inside Omega_a and center dominating the
// half-diagonal.
XaPackingCertificate ball_packing_certificate_Xa(const Rational& a);

}  // namespace symcap
