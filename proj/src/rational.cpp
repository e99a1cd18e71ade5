#include "symcap/rational.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>

namespace symcap {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(text));
        }
        if (slash == 0 || slash + 1 == text.size() || text.find('/', slash + 1) != std::string::npos)
            throw ParseError("malformed rational literal '" + text + "'");
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        // cpp_int's own parse failure comes through here as well
        if (dynamic_cast<const ParseError*>(&e)) throw;
        throw ParseError("malformed rational literal '" + text + "'");
    }
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Int isqrt_floor(const Int& n) {
    if (n < 0) throw RangeError("isqrt_floor of a negative number");
    return boost::multiprecision::sqrt(n);
}

namespace {

// Newton iteration x <- (x + q/x)/2 starting from an upper bound stays an
// upper bound and decreases monotonically toward sqrt(q).
Rational newton_from_above(const Rational& q, unsigned bits) {
    if (q == 0) return Rational(0);
    // A cheap integer starting point: floor(sqrt(ceil(q))) + 1.
    Int n = numerator(q) / denominator(q) + 1;
    Rational x(isqrt_floor(n) + 1);
    const Rational tol = q / Rational(Int(1) << bits);
    for (int i = 0; i < 128 && x * x - q > tol; ++i) x = (x + q / x) / 2;
    return x;
}

}  // namespace

Rational sqrt_upper_bound(const Rational& q, unsigned bits) {
    if (q < 0) throw RangeError("sqrt of a negative number");
    return newton_from_above(q, bits);
}

Rational sqrt_lower_bound(const Rational& q, unsigned bits) {
    if (q < 0) throw RangeError("sqrt of a negative number");
    if (q == 0) return Rational(0);
    // sqrt(q) = q / sqrt(q): dividing by an upper bound gives a lower bound.
    return q / newton_from_above(q, bits);
}

namespace {

Int int_kth_root_floor(const Int& n, unsigned k) {
    if (n == 0) return 0;
    Int lo = 1, hi = Int(1) << (boost::multiprecision::msb(n) / k + 1);
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

Rational rational_pow(const Rational& x, unsigned k) {
    Rational out = 1;
    for (unsigned i = 0; i < k; ++i) out *= x;
    return out;
}

}  // namespace

std::pair<Rational, Rational> kth_root_bounds(const Rational& q, unsigned k, unsigned bits) {
    if (q < 0) throw RangeError("kth root of a negative number");
    if (k == 0) throw RangeError("zeroth root");
    if (q == 0) return {Rational(0), Rational(0)};
    if (k == 1) return {q, q};

    // Perfect powers have exact rational roots.
    const Int rn = int_kth_root_floor(numerator(q), k);
    const Int rd = int_kth_root_floor(denominator(q), k);
    if (boost::multiprecision::pow(rn, k) == numerator(q) &&
        boost::multiprecision::pow(rd, k) == denominator(q)) {
        Rational root(rn, rd);
        return {root, root};
    }

    Rational lo = 0, hi = std::max(Rational(1), q);
    const Rational width = hi / Rational(Int(1) << bits);
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (rational_pow(mid, k) <= q)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    return {lo, hi};
}

}  // namespace symcap
