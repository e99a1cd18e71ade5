#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "symcap/weights.hpp"

namespace symcap {

enum class Exec { Serial, Parallel };

// The unique d >= 0 with d^2 + d <= 2k <= d^2 + 3d.
std::int64_t ball_index(std::int64_t k);

// c_k of the ball of size a: d(k) * a.
Rational ball_capacity(std::int64_t k, const Rational& a);

// Capacities of a finite disjoint union of balls, by dynamic programming
// over the per-ball index choices: giving ball i index d costs a budget of
// d(d+1)/2 and pays d * a_i, and c_k is the best payout within budget k.
// Rows extend on demand; Parallel fills each row's new slots with OpenMP
// (bit-identical to Serial: every slot is computed independently).
class UnionCapacityTable {
  public:
    explicit UnionCapacityTable(std::vector<Rational> balls);

    Rational at(std::int64_t k);
    void ensure(std::int64_t k, Exec exec = Exec::Serial);
    // Bounded read-only access; throws RangeError if k was never computed.
    const Rational& value_at(std::int64_t k) const;
    std::int64_t computed_up_to() const;
    const std::vector<Rational>& balls() const { return balls_; }

  private:
    std::vector<Rational> balls_;                // sorted descending
    std::vector<std::vector<Rational>> rows_;    // suffix DP, rows_[balls+1 - 1] == zero row
};

Rational union_capacity(std::int64_t k, const std::vector<Rational>& balls);

// c_k of a concave domain: the capacity of its weight-ball union.
Rational concave_capacity(std::int64_t k, const MomentPolygon& omega);

struct WeaklyConvexValue {
    Rational value;
    std::int64_t l_min;   // index attaining the minimum
    std::int64_t l_stop;  // first index excluded by the certified bound
};

// c_k of a weakly convex domain: inf over l >= 0 of
// c_{k+l}(B(r)) - c_l(union of inner balls), with the enclosing-simplex size
// r and inner weights from the outer decomposition. The scan stops once
// every further candidate is provably above the best so far: candidate(l)
// >= sqrt(2l) * (r - sbar) - 3r/2 with sbar a rational upper bound on
// sqrt(sum a_i^2) < r, so the threshold is checked as
// 2 l (r - sbar)^2 > (best + 3r/2)^2, all in exact arithmetic.
class WeaklyConvexCapacities {
  public:
    explicit WeaklyConvexCapacities(const MomentPolygon& omega);

    WeaklyConvexValue at_detail(std::int64_t k);
    Rational at(std::int64_t k) { return at_detail(k).value; }
    // c_0 .. c_kmax in one pass over a shared precomputed union table.
    std::vector<Rational> table(std::int64_t kmax, Exec exec = Exec::Serial);

    const Rational& r() const { return r_; }
    const std::vector<Rational>& inner() const { return table_.balls(); }
    const Rational& gap() const { return gap_; }

  private:
    WeaklyConvexValue scan_bounded(std::int64_t k) const;

    Rational r_;
    Rational sbar_;
    Rational gap_;
    UnionCapacityTable table_;
};

WeaklyConvexValue weakly_convex_capacity_detail(std::int64_t k, const MomentPolygon& omega);
Rational weakly_convex_capacity(std::int64_t k, const MomentPolygon& omega);

// Independent test oracle: the (k+1)-th smallest value of
// {m a + n b : m, n >= 0} with multiplicity.
Rational ellipsoid_oracle(std::int64_t k, const Rational& a, const Rational& b);

// Lazily extendable capacity sequence, memoized and safe for concurrent use.
// Instances are shared through a process-wide registry keyed by the
// canonical source (sorted ball multiset, or enclosing size plus inner
// multiset), so repeated scans hit the same table.
class CapacitySequence {
  public:
    Rational at(std::int64_t k);
    const std::string& key() const { return key_; }

    static std::shared_ptr<CapacitySequence> for_union(std::vector<Rational> balls);
    static std::shared_ptr<CapacitySequence> for_weakly_convex(const MomentPolygon& omega);

  private:
    CapacitySequence(std::string key, UnionCapacityTable table);
    CapacitySequence(std::string key, WeaklyConvexCapacities wc);

    std::string key_;
    std::mutex mu_;
    std::optional<UnionCapacityTable> union_table_;
    std::optional<WeaklyConvexCapacities> wc_;
    std::vector<Rational> memo_;
};

// Canonical sequence for a domain: concave profiles canonicalize to their
// weight-ball union, weakly convex ones to their outer decomposition.
// Throws ClassMismatchError when neither formula applies.
std::shared_ptr<CapacitySequence> capacity_sequence_for(const MomentPolygon& omega);

}  // namespace symcap
