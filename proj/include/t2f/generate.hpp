#pragma once

#include "t2f/convolution.hpp"
#include "t2f/piecewise.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace t2f {

/// Parameters of the random-function generators. unitMass is the chance of
/// emitting the unit indicator of {1}; endpointJumpMass the chance of
/// dropping the point value at 1 strictly below its left limit.
struct GeneratorConfig {
    std::uint64_t seed = 0;
    unsigned maxBreakpoints = 6;
    unsigned denominatorBound = 64;
    Rational unitMass = Rational(1, 16);
    Rational endpointJumpMass = Rational(1, 4);

    std::string note() const;
};

/// Deterministic random stream for the generators and suites.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    /// Uniform-ish draw from {0, ..., n-1}; n = 0 yields 0.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    /// Exact-threshold Bernoulli draw.
    bool chance(const Rational& p);
    /// Random k/d with d in [1, denominatorBound]; excludes 1 unless allowed.
    Rational grade(unsigned denominatorBound, bool allowOne);

private:
    std::mt19937_64 eng_;
};

/// Draws a normal convex function: an increasing left branch that reaches 1
/// at xi1 <= xi2, the plateau 1 on [xi1, xi2], a decreasing right branch
/// from xi2, jumps allowed inside the branches; with probability
/// endpointJumpMass (and only when xi1 < 1, keeping every tail supremum
/// attained at a breakpoint) the point value at 1 drops below its left
/// limit. Forcing endpointOne pins whether f(1) = 1.
PiecewiseFn drawNormalConvex(Rng& rng, const GeneratorConfig& cfg,
                             std::optional<bool> endpointOne = std::nullopt);

/// One-shot form seeded from cfg.seed.
PiecewiseFn genNormalConvex(const GeneratorConfig& cfg);

/// Draws an arbitrary function (breakpoints, values and one-sided limits all
/// independent); the source of non-convex, non-normal inputs.
PiecewiseFn drawRough(Rng& rng, const GeneratorConfig& cfg);

/// Brute-force reference for min/max-carrier convolutions, literally the
/// maximum of combiner(f(y), g(z)) over grid pairs with carrier(y,z) = x.
/// The grid must be sorted, lie in [0,1] and contain every breakpoint of f
/// and of g. Exact at grid points whenever each tail (prefix) supremum of f
/// and g is attained at a breakpoint, which drawNormalConvex guarantees.
SampledFn oracleConvolution(const ConvolutionSpec& spec, const PiecewiseFn& f,
                            const PiecewiseFn& g,
                            const std::vector<Rational>& grid);

/// {k/resolution} joined with both breakpoint sets; the standard oracle grid.
std::vector<Rational> breakpointAlignedGrid(const PiecewiseFn& f,
                                            const PiecewiseFn& g,
                                            unsigned resolution);

} // namespace t2f
