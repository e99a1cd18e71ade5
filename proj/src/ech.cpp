#include "symcap/ech.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>

#include "symcap/errors.hpp"

namespace symcap {

namespace {

Rational square(const Rational& x) { return x * x; }

std::int64_t triangular(std::int64_t d) { return d * (d + 1) / 2; }

}  // namespace

std::int64_t ball_index(std::int64_t k) {
    if (k < 0) throw RangeError("capacity index must be nonnegative");
    const Int s = isqrt_floor(Int(k) * 8 + 1);
    const Int d = (s - 1) / 2;
    // d^2 + 3d is even, so the window d^2+d <= 2k <= d^2+3d always closes.
    if (d * d + d > 2 * Int(k) || 2 * Int(k) > d * d + 3 * d)
        throw Error("internal: ball index window failed");
    return d.convert_to<std::int64_t>();
}

Rational ball_capacity(std::int64_t k, const Rational& a) {
    if (a <= 0) throw RangeError("ball size must be positive");
    return Rational(ball_index(k)) * a;
}

UnionCapacityTable::UnionCapacityTable(std::vector<Rational> balls) : balls_(std::move(balls)) {
    for (const Rational& a : balls_)
        if (a <= 0) throw RangeError("union components must be positive");
    std::sort(balls_.begin(), balls_.end(), std::greater<Rational>());
    rows_.assign(balls_.size() + 1, {});
    ensure(0);
}

std::int64_t UnionCapacityTable::computed_up_to() const {
    return static_cast<std::int64_t>(rows_.front().size()) - 1;
}

void UnionCapacityTable::ensure(std::int64_t k, Exec exec) {
    if (k < 0) throw RangeError("capacity index must be nonnegative");
    const std::int64_t old_len = static_cast<std::int64_t>(rows_.front().size());
    const std::int64_t new_len = k + 1;
    if (new_len <= old_len) return;

    const std::int64_t m = static_cast<std::int64_t>(balls_.size());
    rows_[m].resize(new_len, Rational(0));
    for (std::int64_t i = m - 1; i >= 0; --i) {
        rows_[i].resize(new_len);
        const std::vector<Rational>& next = rows_[i + 1];
        std::vector<Rational>& row = rows_[i];
        const Rational& a = balls_[i];
        // Each slot depends only on the already complete next row, so the
        // new slots can be filled in any order.
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
            for (std::int64_t budget = old_len; budget < new_len; ++budget) {
                Rational best = next[budget];
                const std::int64_t dmax = ball_index(budget);
                for (std::int64_t d = 1; d <= dmax; ++d) {
                    Rational v = Rational(d) * a + next[budget - triangular(d)];
                    if (v > best) best = std::move(v);
                }
                row[budget] = std::move(best);
            }
        } else {
            for (std::int64_t budget = old_len; budget < new_len; ++budget) {
                Rational best = next[budget];
                const std::int64_t dmax = ball_index(budget);
                for (std::int64_t d = 1; d <= dmax; ++d) {
                    Rational v = Rational(d) * a + next[budget - triangular(d)];
                    if (v > best) best = std::move(v);
                }
                row[budget] = std::move(best);
            }
        }
    }
}

Rational UnionCapacityTable::at(std::int64_t k) {
    ensure(k);
    return rows_.front()[k];
}

const Rational& UnionCapacityTable::value_at(std::int64_t k) const {
    if (k < 0 || k >= static_cast<std::int64_t>(rows_.front().size()))
        throw RangeError("capacity index beyond computed table");
    return rows_.front()[k];
}

Rational union_capacity(std::int64_t k, const std::vector<Rational>& balls) {
    UnionCapacityTable table(balls);
    return table.at(k);
}

Rational concave_capacity(std::int64_t k, const MomentPolygon& omega) {
    UnionCapacityTable table(weight_sequence(omega).weights);
    return table.at(k);
}

WeaklyConvexCapacities::WeaklyConvexCapacities(const MomentPolygon& omega)
    : table_({}) {
    OuterDecomposition decomp = outer_decomposition(omega);
    r_ = decomp.r;
    table_ = UnionCapacityTable(decomp.inner_weights.weights);

    Rational sum_sq = decomp.inner_weights.sum_of_squares();
    // sum_sq = r^2 - 2*area < r^2, so a tight enough rational upper bound
    // on its square root drops below r.
    sbar_ = 0;
    if (sum_sq > 0) {
        unsigned bits = 32;
        sbar_ = sqrt_upper_bound(sum_sq, bits);
        while (sbar_ >= r_) {
            bits *= 2;
            if (bits > 4096) throw Error("internal: stopping gap did not separate");
            sbar_ = sqrt_upper_bound(sum_sq, bits);
        }
    }
    gap_ = r_ - sbar_;
}

WeaklyConvexValue WeaklyConvexCapacities::at_detail(std::int64_t k) {
    if (k < 0) throw RangeError("capacity index must be nonnegative");
    WeaklyConvexValue out{Rational(0), 0, 0};
    Rational best;
    for (std::int64_t l = 0;; ++l) {
        Rational cand = ball_capacity(k + l, r_) - table_.at(l);
        if (l == 0 || cand < best) {
            best = std::move(cand);
            out.l_min = l;
        }
        const Rational roof = best + Rational(3, 2) * r_;
        if (roof <= 0 || Rational(2 * (l + 1)) * square(gap_) > square(roof)) {
            out.l_stop = l + 1;
            break;
        }
    }
    out.value = best;
    return out;
}

WeaklyConvexValue WeaklyConvexCapacities::scan_bounded(std::int64_t k) const {
    WeaklyConvexValue out{Rational(0), 0, 0};
    Rational best;
    for (std::int64_t l = 0;; ++l) {
        Rational cand = ball_capacity(k + l, r_) - table_.value_at(l);
        if (l == 0 || cand < best) {
            best = std::move(cand);
            out.l_min = l;
        }
        const Rational roof = best + Rational(3, 2) * r_;
        if (roof <= 0 || Rational(2 * (l + 1)) * square(gap_) > square(roof)) {
            out.l_stop = l + 1;
            break;
        }
    }
    out.value = best;
    return out;
}

std::vector<Rational> WeaklyConvexCapacities::table(std::int64_t kmax, Exec exec) {
    if (kmax < 0) throw RangeError("capacity index must be nonnegative");
    // Every scan below keeps best <= candidate(0) = d(k) r <= d(kmax) r, so
    // no scan can pass l once 2 l gap^2 > (d(kmax) r + 3r/2)^2.
    const Rational roof = Rational(ball_index(kmax)) * r_ + Rational(3, 2) * r_;
    const Rational ratio = square(roof) / (square(gap_) * 2);
    const Int bound = numerator(ratio) / denominator(ratio) + 2;
    table_.ensure(bound.convert_to<std::int64_t>() + kmax, exec);

    std::vector<Rational> out(kmax + 1);
    if (exec == Exec::Parallel) {
        std::atomic<bool> escaped{false};
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k <= kmax; ++k) {
            try {
                out[k] = scan_bounded(k).value;
            } catch (...) {
                escaped.store(true);
            }
        }
        if (escaped.load()) throw Error("internal: bounded scan escaped its table");
    } else {
        for (std::int64_t k = 0; k <= kmax; ++k) out[k] = scan_bounded(k).value;
    }
    return out;
}

WeaklyConvexValue weakly_convex_capacity_detail(std::int64_t k, const MomentPolygon& omega) {
    WeaklyConvexCapacities seq(omega);
    return seq.at_detail(k);
}

Rational weakly_convex_capacity(std::int64_t k, const MomentPolygon& omega) {
    return weakly_convex_capacity_detail(k, omega).value;
}

Rational ellipsoid_oracle(std::int64_t k, const Rational& a, const Rational& b) {
    if (k < 0) throw RangeError("capacity index must be nonnegative");
    if (a <= 0 || b <= 0) throw RangeError("ellipsoid factors must be positive");
    // Enumerate m*a + n*b on the common denominator, so the selection runs
    // on integers. The k+1 multiples 0, a, ..., k*a of the smaller factor
    // already bound the answer, so it suffices to enumerate below that cap.
    const Int na = numerator(a) * denominator(b);
    const Int nb = numerator(b) * denominator(a);
    const Int den = denominator(a) * denominator(b);
    const Int cap = Int(k) * std::min(na, nb);
    std::vector<Int> keys;
    for (Int ma = 0; ma <= cap; ma += na)
        for (Int v = ma; v <= cap; v += nb) keys.push_back(v);
    std::nth_element(keys.begin(), keys.begin() + k, keys.end());
    return Rational(keys[k], den);
}

CapacitySequence::CapacitySequence(std::string key, UnionCapacityTable table)
    : key_(std::move(key)), union_table_(std::move(table)) {}

CapacitySequence::CapacitySequence(std::string key, WeaklyConvexCapacities wc)
    : key_(std::move(key)), wc_(std::move(wc)) {}

Rational CapacitySequence::at(std::int64_t k) {
    if (k < 0) throw RangeError("capacity index must be nonnegative");
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<std::int64_t>(memo_.size()) <= k) {
        const std::int64_t next = static_cast<std::int64_t>(memo_.size());
        memo_.push_back(union_table_ ? union_table_->at(next) : wc_->at(next));
    }
    return memo_[k];
}

namespace {

std::string join_rationals(const std::vector<Rational>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << to_string(v[i]);
    }
    return os.str();
}

std::mutex registry_mu;
std::map<std::string, std::shared_ptr<CapacitySequence>>& registry() {
    static std::map<std::string, std::shared_ptr<CapacitySequence>> reg;
    return reg;
}

std::shared_ptr<CapacitySequence> intern(const std::string& key,
                                         std::shared_ptr<CapacitySequence> fresh) {
    std::lock_guard<std::mutex> lock(registry_mu);
    auto [it, inserted] = registry().emplace(key, std::move(fresh));
    return it->second;
}

}  // namespace

std::shared_ptr<CapacitySequence> CapacitySequence::for_union(std::vector<Rational> balls) {
    UnionCapacityTable table(std::move(balls));
    std::string key = "union[" + join_rationals(table.balls()) + "]";
    return intern(key, std::shared_ptr<CapacitySequence>(
                           new CapacitySequence(key, std::move(table))));
}

std::shared_ptr<CapacitySequence> CapacitySequence::for_weakly_convex(const MomentPolygon& omega) {
    WeaklyConvexCapacities wc(omega);
    std::string key =
        "outer[" + to_string(wc.r()) + ";" + join_rationals(wc.inner()) + "]";
    return intern(key, std::shared_ptr<CapacitySequence>(
                           new CapacitySequence(key, std::move(wc))));
}

std::shared_ptr<CapacitySequence> capacity_sequence_for(const MomentPolygon& omega) {
    const DomainClass cls = classify(omega);
    if (cls.concave) return CapacitySequence::for_union(weight_sequence(omega).weights);
    if (cls.weakly_convex) return CapacitySequence::for_weakly_convex(omega);
    throw ClassMismatchError(
        "capacity sequence requires a concave or weakly convex profile");
}

}  // namespace symcap
