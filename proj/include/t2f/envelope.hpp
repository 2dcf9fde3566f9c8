#pragma once

#include "t2f/piecewise.hpp"

namespace t2f {

/// Monotone envelopes: leftEnvelope(f)(x) = sup{f(y) : y <= x} and
/// rightEnvelope(f)(x) = sup{f(y) : y >= x}, both exact.
PiecewiseFn leftEnvelope(const PiecewiseFn& f);
PiecewiseFn rightEnvelope(const PiecewiseFn& f);

/// Weak envelopes use strict comparison: weakLeftEnvelope(f)(x) =
/// sup{f(y) : y < x} for x in (0,1], and f(0) at 0 (equivalently the left
/// limit of leftEnvelope(f)). weakRightEnvelope is the mirror image.
PiecewiseFn weakLeftEnvelope(const PiecewiseFn& f);
PiecewiseFn weakRightEnvelope(const PiecewiseFn& f);

/// sup f = 1.
bool isNormal(const PiecewiseFn& f);

/// Exact convexity test: f equals min(leftEnvelope(f), rightEnvelope(f)).
bool isConvex(const PiecewiseFn& f);

/// Structural data of a normal function:
///   l1 = inf{x : leftEnvelope(f)(x) = 1}
///   r1 = sup{x : rightEnvelope(f)(x) = 1}
///   bf = sup{x : f(x) = leftEnvelope(f)(x)}
///   cf = inf{x : f(x) = rightEnvelope(f)(x)}
/// For normal convex f, bf = r1 and cf = l1.
struct BalanceData {
    Rational l1;
    Rational r1;
    Rational bf;
    Rational cf;
};

/// Requires isNormal(f); throws PreconditionError otherwise.
BalanceData balanceData(const PiecewiseFn& f);

/// Rebuilds a normal convex f from its five-branch shape -- leftEnvelope on
/// [0, l1), the point value at l1, the plateau 1 on (l1, r1), the point value
/// at r1, rightEnvelope on (r1, 1] -- and asserts exact equality with f.
/// Requires f normal and convex.
PiecewiseFn convexProfile(const PiecewiseFn& f);

} // namespace t2f
