#pragma once

#include "t2f/interval.hpp"
#include "t2f/piecewise.hpp"
#include "t2f/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace t2f {

/// Meet convolution (f ⊓ g)(x) = sup{ f(y) ∧ g(z) : min(y,z) = x }, computed
/// exactly through the closed form (f ∧ rightEnvelope(g)) ∨
/// (g ∧ rightEnvelope(f)); the decomposition of {min(y,z) = x} into
/// {y = x, z >= x} and {z = x, y >= x} makes the closed form exact for every
/// pair of functions, which the verify module certifies against a
/// brute-force oracle.
PiecewiseFn meetConv(const PiecewiseFn& f, const PiecewiseFn& g);

/// Join convolution, the dual with max(y,z) = x and left envelopes.
PiecewiseFn joinConv(const PiecewiseFn& f, const PiecewiseFn& g);

/// (¬f)(x) = f(1 - x).
PiecewiseFn negation(const PiecewiseFn& f);

/// Meet convolution with the point value at 1 forced to 0 (left limit kept).
PiecewiseFn barMeet(const PiecewiseFn& f, const PiecewiseFn& g);

/// The lattice-ordered t-norm on normal convex functions: returns the other
/// factor when one argument is the unit indicator of {1}; otherwise the meet
/// convolution when f(1) ∧ g(1) = 1, else barMeet. Requires both inputs
/// normal and convex (throws PreconditionError).
PiecewiseFn starOp(const PiecewiseFn& f, const PiecewiseFn& g);

enum class Direction { Norm, Conorm };

/// Combiner/carrier pair for a general sup-convolution
///   (f op g)(x) = sup{ combiner(f(y), g(z)) : carrier(y, z) = x }.
/// Direction Norm requires a t-norm carrier, Conorm a t-conorm carrier.
struct ConvolutionSpec {
    ScalarTNorm combiner;
    ScalarTNorm carrier;
    Direction direction;

    ConvolutionSpec(ScalarTNorm combiner, ScalarTNorm carrier, Direction direction);
};

/// Grid sampling of a function: (x, value) pairs with x ascending.
struct SampledFn {
    std::vector<std::pair<Rational, Rational>> points;
    bool exact = false;
};

/// Sampled general convolution at x = k/resolution. Carrier min (max) with
/// combiner min dispatches to the exact closed forms; every other pairing is
/// an approximation that buckets grid pairs by the nearest grid point of
/// carrier(y,z) (inclusive half-band 1/(2*resolution)). Requires
/// resolution >= 2.
SampledFn generalConvolution(const ConvolutionSpec& spec, const PiecewiseFn& f,
                             const PiecewiseFn& g, unsigned resolution);

/// Exact value of the general convolution at x = 1. For a t-norm carrier the
/// constraint carrier(y,z) = 1 forces y = z = 1, so this is
/// combiner(f(1), g(1)). Requires a t-norm carrier.
Rational convolutionAtOne(const ConvolutionSpec& spec, const PiecewiseFn& f,
                          const PiecewiseFn& g);

/// f ⊑ g (meet order): meetConv(f,g) = f. On normal convex inputs this is
/// decided through the envelope characterisation leftEnvelope(g) <=
/// leftEnvelope(f) and rightEnvelope(f) <= rightEnvelope(g).
bool orderMeet(const PiecewiseFn& f, const PiecewiseFn& g);

/// f ⪯ g (join order): joinConv(f,g) = g.
bool orderJoin(const PiecewiseFn& f, const PiecewiseFn& g);

/// Interval witness showing that endpoint monotonicity (4) and (5) do not
/// imply containment monotonicity (5') for circledStar.
struct Q1Report {
    Interval x;
    Interval y;
    Interval z;
    Interval zx;
    Interval zy;
    bool premiseSubset;
    bool conclusionSubset;

    bool violated() const { return premiseSubset && !conclusionSubset; }
    std::string toText() const;
};

Q1Report counterexampleQ1();

/// One combiner/carrier pairing in the Q2 sweep.
struct Q2Row {
    std::string combiner;
    std::string carrier;
    Rational convAtOne;
    Rational starAtOne;
};

/// Witness pair (the full indicator 1_[0,1] and a triangular function with
/// peak 1 at 1/2 and value 1/2 at 1) on which the value of starOp at 1
/// differs from every convolution built from the listed t-norms.
struct Q2Report {
    PiecewiseFn f;
    PiecewiseFn g;
    std::vector<Q2Row> rows;

    bool allDiffer() const;
    std::string toText() const;
};

Q2Report counterexampleQ2();

} // namespace t2f
