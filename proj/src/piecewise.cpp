#include "t2f/piecewise.hpp"

#include "t2f/errors.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace t2f {

namespace {

// Line through (x0,y0) and (x1,y1) evaluated at x; requires x0 != x1.
Rational lineAt(const Rational& x0, const Rational& y0, const Rational& x1,
                const Rational& y1, const Rational& x) {
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

std::string atIndex(std::size_t i) {
    return " (breakpoint " + std::to_string(i) + ")";
}

void validate(const std::vector<Breakpoint>& bps) {
    if (bps.size() < 2)
        throw InvariantError("a function needs breakpoints at both 0 and 1");
    if (bps.front().x != 0)
        throw InvariantError("first breakpoint must be at x = 0");
    if (bps.back().x != 1)
        throw InvariantError("last breakpoint must be at x = 1");
    for (std::size_t i = 0; i < bps.size(); ++i) {
        const Breakpoint& b = bps[i];
        if (i > 0 && !(bps[i - 1].x < b.x))
            throw InvariantError("breakpoints not strictly increasing" + atIndex(i));
        if (!inUnitInterval(b.x))
            throw InvariantError("breakpoint outside [0,1]" + atIndex(i));
        if (b.left.has_value() != (b.x != 0))
            throw InvariantError(b.left ? "left limit present at x = 0" + atIndex(i)
                                        : "missing left limit" + atIndex(i));
        if (b.right.has_value() != (b.x != 1))
            throw InvariantError(b.right ? "right limit present at x = 1" + atIndex(i)
                                         : "missing right limit" + atIndex(i));
        if (!inUnitInterval(b.value) || (b.left && !inUnitInterval(*b.left)) ||
            (b.right && !inUnitInterval(*b.right)))
            throw InvariantError("grade outside [0,1]" + atIndex(i));
    }
}

void canonicalize(std::vector<Breakpoint>& bps) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 1; i + 1 < bps.size(); ++i) {
            const Breakpoint& b = bps[i];
            if (b.value != *b.left || b.value != *b.right)
                continue;
            const Breakpoint& p = bps[i - 1];
            const Breakpoint& n = bps[i + 1];
            if (lineAt(p.x, *p.right, n.x, *n.left, b.x) != b.value)
                continue;
            bps.erase(bps.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
        }
    }
}

} // namespace

PiecewiseFn::PiecewiseFn() : PiecewiseFn(constant(0)) {}

PiecewiseFn::PiecewiseFn(std::vector<Breakpoint> bps, Trusted)
    : bps_(std::move(bps)) {}

PiecewiseFn PiecewiseFn::constant(const Rational& c) {
    if (!inUnitInterval(c))
        throw InvariantError("grade outside [0,1]");
    std::vector<Breakpoint> bps;
    bps.push_back({Rational(0), std::nullopt, c, c});
    bps.push_back({Rational(1), c, c, std::nullopt});
    return PiecewiseFn(std::move(bps), Trusted{});
}

PiecewiseFn PiecewiseFn::indicatorInterval(const Rational& a, const Rational& b) {
    if (!inUnitInterval(a) || !inUnitInterval(b) || a > b)
        throw InvariantError("indicator interval must satisfy 0 <= a <= b <= 1");
    std::vector<Rational> xs{Rational(0), a, b, Rational(1)};
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    auto member = [&](const Rational& x) { return a <= x && x <= b; };
    std::vector<Breakpoint> bps;
    for (const Rational& x : xs) {
        Breakpoint bp;
        bp.x = x;
        bp.value = member(x) ? 1 : 0;
        if (x != 0)
            bp.left = (a < x && x <= b) ? 1 : 0;
        if (x != 1)
            bp.right = (a <= x && x < b) ? 1 : 0;
        bps.push_back(std::move(bp));
    }
    return fromBreakpoints(std::move(bps));
}

PiecewiseFn PiecewiseFn::indicatorPoint(const Rational& x) {
    return indicatorInterval(x, x);
}

PiecewiseFn PiecewiseFn::unit() {
    return indicatorPoint(1);
}

PiecewiseFn PiecewiseFn::fromBreakpoints(std::vector<Breakpoint> bps) {
    validate(bps);
    canonicalize(bps);
    return PiecewiseFn(std::move(bps), Trusted{});
}

std::size_t PiecewiseFn::pieceContaining(const Rational& x) const {
    auto it = std::upper_bound(bps_.begin(), bps_.end(), x,
                               [](const Rational& v, const Breakpoint& b) {
                                   return v < b.x;
                               });
    assert(it != bps_.begin() && it != bps_.end());
    return static_cast<std::size_t>(it - bps_.begin()) - 1;
}

Rational PiecewiseFn::evalAt(const Rational& x) const {
    if (!inUnitInterval(x))
        throw DomainError("evaluation outside [0,1]");
    auto it = std::lower_bound(bps_.begin(), bps_.end(), x,
                               [](const Breakpoint& b, const Rational& v) {
                                   return b.x < v;
                               });
    if (it != bps_.end() && it->x == x)
        return it->value;
    std::size_t i = pieceContaining(x);
    return lineAt(bps_[i].x, *bps_[i].right, bps_[i + 1].x, *bps_[i + 1].left, x);
}

Rational PiecewiseFn::leftLimitAt(const Rational& x) const {
    if (!(x > 0 && x <= 1))
        throw DomainError("left limit requires x in (0,1]");
    auto it = std::lower_bound(bps_.begin(), bps_.end(), x,
                               [](const Breakpoint& b, const Rational& v) {
                                   return b.x < v;
                               });
    if (it != bps_.end() && it->x == x)
        return *it->left;
    return evalAt(x); // continuous strictly inside a piece
}

Rational PiecewiseFn::rightLimitAt(const Rational& x) const {
    if (!(x >= 0 && x < 1))
        throw DomainError("right limit requires x in [0,1)");
    auto it = std::lower_bound(bps_.begin(), bps_.end(), x,
                               [](const Breakpoint& b, const Rational& v) {
                                   return b.x < v;
                               });
    if (it != bps_.end() && it->x == x)
        return *it->right;
    return evalAt(x);
}

SupResult PiecewiseFn::supOn(const Rational& lo, const Rational& hi, bool loOpen,
                             bool hiOpen) const {
    if (!inUnitInterval(lo) || !inUnitInterval(hi))
        throw DomainError("supOn interval outside [0,1]");
    if (lo > hi || (lo == hi && (loOpen || hiOpen)))
        throw PreconditionError("supOn over an empty interval");
    if (lo == hi)
        return {evalAt(lo), true};

    bool seeded = false;
    SupResult best{Rational(0), false};
    auto consider = [&](const Rational& v, bool attained) {
        if (!seeded || v > best.value) {
            best = {v, attained};
            seeded = true;
        } else if (v == best.value) {
            best.attained = best.attained || attained;
        }
    };

    if (!loOpen)
        consider(evalAt(lo), true);
    if (!hiOpen)
        consider(evalAt(hi), true);
    for (const Breakpoint& b : bps_)
        if (lo < b.x && b.x < hi)
            consider(b.value, true);

    for (std::size_t i = 0; i + 1 < bps_.size(); ++i) {
        const Rational& u = bps_[i].x;
        const Rational& v = bps_[i + 1].x;
        Rational a = std::max(u, lo);
        Rational b = std::min(v, hi);
        if (a >= b)
            continue;
        // Ends of the clipped open piece are closed only where a closed
        // interval end falls strictly inside the piece.
        bool aClosed = (a == lo) && !loOpen && lo > u;
        bool bClosed = (b == hi) && !hiOpen && hi < v;
        Rational fu = *bps_[i].right;
        Rational fv = *bps_[i + 1].left;
        Rational ya = lineAt(u, fu, v, fv, a);
        Rational yb = lineAt(u, fu, v, fv, b);
        if (ya == yb)
            consider(ya, true); // constant: attained at interior points
        else if (ya > yb)
            consider(ya, aClosed);
        else
            consider(yb, bClosed);
    }
    return best;
}

Rational PiecewiseFn::supValue() const {
    return supOn(0, 1, false, false).value;
}

namespace detail {

std::vector<Rational> refinedGrid(const PiecewiseFn& f, const PiecewiseFn& g) {
    std::vector<Rational> xs;
    for (const Breakpoint& b : f.breakpoints())
        xs.push_back(b.x);
    for (const Breakpoint& b : g.breakpoints())
        xs.push_back(b.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Rational> crossings;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const Rational& u = xs[i];
        const Rational& v = xs[i + 1];
        Rational f0 = f.rightLimitAt(u), f1 = f.leftLimitAt(v);
        Rational g0 = g.rightLimitAt(u), g1 = g.leftLimitAt(v);
        Rational denom = (f1 - f0) - (g1 - g0);
        if (denom == 0)
            continue; // parallel: no isolated crossing
        Rational t = (g0 - f0) / denom;
        if (t > 0 && t < 1)
            crossings.push_back(u + t * (v - u));
    }
    xs.insert(xs.end(), crossings.begin(), crossings.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

} // namespace detail

namespace {

PiecewiseFn combine(const PiecewiseFn& f, const PiecewiseFn& g, bool takeMin) {
    auto pick = [takeMin](const Rational& a, const Rational& b) {
        return takeMin ? std::min(a, b) : std::max(a, b);
    };
    std::vector<Breakpoint> out;
    for (const Rational& x : detail::refinedGrid(f, g)) {
        Breakpoint bp;
        bp.x = x;
        bp.value = pick(f.evalAt(x), g.evalAt(x));
        if (x != 0)
            bp.left = pick(f.leftLimitAt(x), g.leftLimitAt(x));
        if (x != 1)
            bp.right = pick(f.rightLimitAt(x), g.rightLimitAt(x));
        out.push_back(std::move(bp));
    }
    return PiecewiseFn::fromBreakpoints(std::move(out));
}

} // namespace

PiecewiseFn pointwiseMin(const PiecewiseFn& f, const PiecewiseFn& g) {
    return combine(f, g, true);
}

PiecewiseFn pointwiseMax(const PiecewiseFn& f, const PiecewiseFn& g) {
    return combine(f, g, false);
}

PiecewiseFn reflect(const PiecewiseFn& f) {
    std::vector<Breakpoint> out;
    const auto& bps = f.breakpoints();
    for (auto it = bps.rbegin(); it != bps.rend(); ++it) {
        Breakpoint bp;
        bp.x = 1 - it->x;
        bp.left = it->right;
        bp.value = it->value;
        bp.right = it->left;
        out.push_back(std::move(bp));
    }
    return PiecewiseFn::fromBreakpoints(std::move(out));
}

PiecewiseFn withValueAtOne(const PiecewiseFn& f, const Rational& v) {
    std::vector<Breakpoint> bps = f.breakpoints();
    bps.back().value = v;
    return PiecewiseFn::fromBreakpoints(std::move(bps));
}

bool leq(const PiecewiseFn& f, const PiecewiseFn& g) {
    return pointwiseMin(f, g) == f;
}

std::vector<Rational> probePoints(const PiecewiseFn& f) {
    std::vector<Rational> out;
    const auto& bps = f.breakpoints();
    for (std::size_t i = 0; i < bps.size(); ++i) {
        out.push_back(bps[i].x);
        if (i + 1 < bps.size())
            out.push_back((bps[i].x + bps[i + 1].x) / 2);
    }
    return out;
}

} // namespace t2f
