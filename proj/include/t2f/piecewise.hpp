#pragma once

#include "t2f/rational.hpp"

#include <optional>
#include <vector>

namespace t2f {

/// One node of a piecewise-linear function on [0,1].
///
/// `value` is the function value at `x`; `left` and `right` are the one-sided
/// limits, which differ from `value` exactly at jump discontinuities. `left`
/// is absent only at x = 0 and `right` only at x = 1.
struct Breakpoint {
    Rational x;
    std::optional<Rational> left;
    Rational value;
    std::optional<Rational> right;

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

struct SupResult {
    Rational value;
    bool attained;
};

/// A function [0,1] -> [0,1], linear between breakpoints with jump
/// discontinuities allowed at breakpoints. Between consecutive breakpoints
/// the graph is the straight line joining the right limit of the left node
/// to the left limit of the right node.
///
/// Instances are always canonical: the first breakpoint sits at 0, the last
/// at 1, and no breakpoint is removable (a breakpoint is removable when its
/// value equals both one-sided limits and the adjacent pieces are collinear).
/// Because of this, operator== decides extensional equality of functions.
class PiecewiseFn {
public:
    /// The zero function.
    PiecewiseFn();

    static PiecewiseFn constant(const Rational& c);
    /// Characteristic function of the closed interval [a, b].
    static PiecewiseFn indicatorInterval(const Rational& a, const Rational& b);
    /// Characteristic function of the single point {x}.
    static PiecewiseFn indicatorPoint(const Rational& x);
    /// Characteristic function of {1}; the neutral element of starOp.
    static PiecewiseFn unit();
    /// Validates every representation invariant (ordering, endpoint limits,
    /// grades in [0,1]) and canonicalizes. Throws InvariantError on failure.
    static PiecewiseFn fromBreakpoints(std::vector<Breakpoint> bps);

    const std::vector<Breakpoint>& breakpoints() const { return bps_; }

    /// Exact evaluation; throws DomainError outside [0,1].
    Rational evalAt(const Rational& x) const;
    Rational operator()(const Rational& x) const { return evalAt(x); }

    /// One-sided limits at any point of (0,1] resp. [0,1).
    Rational leftLimitAt(const Rational& x) const;
    Rational rightLimitAt(const Rational& x) const;

    /// Exact supremum over the interval from lo to hi with selectable open
    /// or closed ends, plus whether the supremum is attained. Requires
    /// lo <= hi, and both ends closed when lo == hi.
    SupResult supOn(const Rational& lo, const Rational& hi, bool loOpen,
                    bool hiOpen) const;

    /// supOn over all of [0,1], value only.
    Rational supValue() const;

    friend bool operator==(const PiecewiseFn&, const PiecewiseFn&) = default;

private:
    struct Trusted {};
    PiecewiseFn(std::vector<Breakpoint> bps, Trusted);

    // Index of the piece (bps_[i].x, bps_[i+1].x) strictly containing x.
    std::size_t pieceContaining(const Rational& x) const;

    std::vector<Breakpoint> bps_;
};

/// Exact pointwise minimum / maximum; breakpoints are the union of the
/// operands' breakpoints plus their crossing points.
PiecewiseFn pointwiseMin(const PiecewiseFn& f, const PiecewiseFn& g);
PiecewiseFn pointwiseMax(const PiecewiseFn& f, const PiecewiseFn& g);

/// x |-> f(1 - x).
PiecewiseFn reflect(const PiecewiseFn& f);

/// Same function with the point value at 1 replaced (limits untouched).
PiecewiseFn withValueAtOne(const PiecewiseFn& f, const Rational& v);

/// Pointwise f <= g.
bool leq(const PiecewiseFn& f, const PiecewiseFn& g);

namespace detail {
/// Sorted union of both breakpoint sets plus every crossing point of
/// overlapping linear pieces. Shared by pointwiseMin/Max and the agreement
/// scans in the envelope module.
std::vector<Rational> refinedGrid(const PiecewiseFn& f, const PiecewiseFn& g);
} // namespace detail

/// Breakpoint abscissas plus the midpoint of every piece; the standard probe
/// set for pointwise spot checks.
std::vector<Rational> probePoints(const PiecewiseFn& f);

} // namespace t2f
