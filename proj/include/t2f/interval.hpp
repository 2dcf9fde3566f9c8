#pragma once

#include "t2f/rational.hpp"
#include "t2f/report.hpp"

#include <functional>
#include <vector>

namespace t2f {

/// Closed subinterval of [0,1]; lo <= hi enforced at construction.
struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational lo, Rational hi);
    static Interval point(const Rational& x) { return Interval(x, x); }

    bool degenerate() const { return lo == hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Componentwise lattice operations on interval endpoints.
Interval meet(const Interval& x, const Interval& y);
Interval join(const Interval& x, const Interval& y);

/// Product (componentwise) order: x.lo <= y.lo and x.hi <= y.hi.
bool leqProduct(const Interval& x, const Interval& y);
/// Containment order: y.lo <= x.lo and x.hi <= y.hi.
bool subsetOrder(const Interval& x, const Interval& y);

/// The degenerate interval {x.hi * y.hi} (the maximum of the product over
/// the box x times y).
Interval circledStar(const Interval& x, const Interval& y);

using ScalarOp = std::function<Rational(const Rational&, const Rational&)>;

/// Endpointwise lifting [op(x.lo,y.lo), op(x.hi,y.hi)] of a monotone scalar
/// operation.
Interval convolutionIntervalTNorm(const ScalarOp& op, const Interval& x,
                                  const Interval& y);

using IntervalOp = std::function<Interval(const Interval&, const Interval&)>;

/// Evaluates the interval t-norm conditions (1)-(7) plus the monotonicity
/// variants (4') and (5') for `op` over the probe set, one law per
/// condition with a witness on failure. Purely observational: the report
/// records what holds, it asserts nothing.
PropertyReport checkDef2Conditions(const IntervalOp& op,
                                   const std::vector<Interval>& probes,
                                   const std::string& opName);

/// All intervals [a,b], a <= b, with endpoints drawn from `values`.
std::vector<Interval> intervalProbeGrid(const std::vector<Rational>& values);

/// The default endpoint grid {0, 1/4, 1/2, 3/4, 1}.
std::vector<Rational> defaultProbeValues();

enum class FactorSide { First, Second };

/// Given meet(x,y) (resp. join) degenerate, reports which argument is
/// degenerate. Throws PreconditionError when the meet (join) is not
/// degenerate.
FactorSide singlePointFactorMeet(const Interval& x, const Interval& y);
FactorSide singlePointFactorJoin(const Interval& x, const Interval& y);

std::string formatInterval(const Interval& iv);

} // namespace t2f
