#include "symcap/weights.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "symcap/errors.hpp"

namespace symcap {

Rational WeightSequence::sum_of_squares() const {
    Rational s{0};
    for (const Rational& w : weights) s += w * w;
    return s;
}

namespace {

// First and last chain index attaining the given value of mu1 + mu2. The
// attaining set is always a vertex or a single edge of direction (1,-1);
// anything else means the caller's class check let a bad chain through.
std::pair<std::size_t, std::size_t> extreme_range(const std::vector<Point2>& chain,
                                                  const Rational& value) {
    std::size_t ts = std::numeric_limits<std::size_t>::max(), te = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].x + chain[i].y == value) {
            ts = std::min(ts, i);
            te = std::max(te, i);
        }
    }
    if (ts == std::numeric_limits<std::size_t>::max())
        throw Error("internal: extreme value not attained on the chain");
    if (te > ts + 1) throw Error("internal: extreme face of the chain is not connected");
    if (te == ts + 1 && cross(chain[te] - chain[ts], Point2{1, -1}) != 0)
        throw Error("internal: extreme edge is not antidiagonal");
    return {ts, te};
}

MomentPolygon map_chain_slice(const std::vector<Point2>& chain, std::size_t from, std::size_t to,
                              const UnimodularAffine& t) {
    std::vector<Point2> mapped;
    mapped.reserve(to - from + 1);
    for (std::size_t i = from; i <= to; ++i) mapped.push_back(t(chain[i]));
    return MomentPolygon(std::move(mapped));
}

void expand_concave(const MomentPolygon& omega, const UnimodularAffine& into_root, int depth,
                    WeightSequence& out) {
    if (!classify(omega).concave)
        throw ClassMismatchError("weight expansion requires a concave profile");

    const auto& chain = omega.chain();
    Rational r = chain.front().x + chain.front().y;
    for (const Point2& v : chain) r = std::min(r, Rational(v.x + v.y));
    out.weights.push_back(r);
    out.triangles.push_back({into_root, r, depth});

    const auto [ts, te] = extreme_range(chain, r);
    if (ts > 0) {
        // Piece along the mu2 axis: the cut line mu1 + mu2 = r becomes the
        // new mu1 axis.
        const UnimodularAffine u(1, 0, 1, 1, {0, -r});
        const MomentPolygon sub = map_chain_slice(chain, 0, ts, u);
        if (sub.area() >= omega.area()) throw Error("internal: expansion step did not shrink");
        expand_concave(sub, into_root * u.inverse(), depth + 1, out);
    }
    if (te + 1 < chain.size()) {
        // Piece along the mu1 axis.
        const UnimodularAffine v(1, 1, 0, 1, {-r, 0});
        const MomentPolygon sub = map_chain_slice(chain, te, chain.size() - 1, v);
        if (sub.area() >= omega.area()) throw Error("internal: expansion step did not shrink");
        expand_concave(sub, into_root * v.inverse(), depth + 1, out);
    }
}

}  // namespace

WeightSequence weight_sequence(const MomentPolygon& omega) {
    WeightSequence ws;
    expand_concave(omega, UnimodularAffine::identity(), 0, ws);
    std::sort(ws.weights.begin(), ws.weights.end(), std::greater<Rational>());
    if (ws.sum_of_squares() != 2 * omega.area())
        throw Error("internal: weight squares do not exhaust the area");
    return ws;
}

OuterDecomposition outer_decomposition(const MomentPolygon& omega) {
    if (!classify(omega).weakly_convex)
        throw ClassMismatchError("outer decomposition requires a weakly convex profile");

    const auto& chain = omega.chain();
    OuterDecomposition out;
    out.r = 0;
    for (const Point2& v : chain) out.r = std::max(out.r, Rational(v.x + v.y));

    const auto [ts, te] = extreme_range(chain, out.r);
    if (ts > 0) {
        // Piece between the chain and the mu2 axis; the enclosing simplex
        // edge mu1 + mu2 = r becomes the new mu1 axis.
        const UnimodularAffine t(1, 0, -1, -1, {0, out.r});
        out.pieces.push_back({map_chain_slice(chain, 0, ts, t), t.inverse()});
    }
    if (te + 1 < chain.size()) {
        const UnimodularAffine t(-1, -1, 0, 1, {out.r, 0});
        out.pieces.push_back({map_chain_slice(chain, te, chain.size() - 1, t), t.inverse()});
    }

    for (const OuterPiece& piece : out.pieces) {
        const WeightSequence ws = weight_sequence(piece.profile);
        out.inner_weights.weights.insert(out.inner_weights.weights.end(), ws.weights.begin(),
                                         ws.weights.end());
        for (const PlacedTriangle& tri : ws.triangles)
            out.inner_weights.triangles.push_back(
                {piece.into_parent * tri.placement, tri.size, tri.depth});
    }
    std::sort(out.inner_weights.weights.begin(), out.inner_weights.weights.end(),
              std::greater<Rational>());

    if (out.r * out.r != 2 * omega.area() + out.inner_weights.sum_of_squares())
        throw Error("internal: outer decomposition does not balance the area");
    return out;
}

}  // namespace symcap
