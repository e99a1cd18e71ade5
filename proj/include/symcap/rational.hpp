#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>

#include "symcap/errors.hpp"

namespace symcap {

// All scalar quantities in the library are exact rationals. cpp_rational is
// stored reduced with positive denominator, which is exactly the canonical
// form the serializers rely on. Floating point appears only at the SVG/plot
// boundary, via to_double below.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" (q > 0 after sign normalization). Throws ParseError.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is one, else "p/q".
std::string to_string(const Rational& q);

// Lossy. Only for figures and human-facing plots, never for decisions.
double to_double(const Rational& q);

// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);

// Rational upper bound on sqrt(q): returns s with s*s >= q, tightened by
// Newton steps until s*s - q <= q / 2^precision_bits (or s == 0 for q == 0).
Rational sqrt_upper_bound(const Rational& q, unsigned precision_bits = 32);

// Rational lower bound on sqrt(q): s with s*s <= q, same tightening scheme.
Rational sqrt_lower_bound(const Rational& q, unsigned precision_bits = 32);

// Bracket [lo, hi] around q^(1/k) for q >= 0, k >= 1, with lo^k <= q <= hi^k
// and hi - lo <= max(1, q) / 2^precision_bits. Collapses to the exact root
// when q is a perfect k-th power of a rational.
std::pair<Rational, Rational> kth_root_bounds(const Rational& q, unsigned k,
                                              unsigned precision_bits = 48);

// Closed interval with exact endpoints. Used for quantities we can only
// bracket (Gromov widths outside the exactly-solved classes).
struct RatInterval {
    Rational lo;
    Rational hi;

    RatInterval() = default;
    explicit RatInterval(const Rational& exact) : lo(exact), hi(exact) {}
    RatInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo > hi) throw ValidationError("interval endpoints out of order");
    }

    bool exact() const { return lo == hi; }
    const Rational& value() const {
        if (!exact()) throw Error("interval is not a point");
        return lo;
    }
    bool operator==(const RatInterval&) const = default;
};

}  // namespace symcap
