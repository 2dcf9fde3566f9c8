#pragma once

#include "t2f/rational.hpp"
#include "t2f/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace t2f {

enum class OpFamily { TNorm, TConorm, Plain };

/// A named binary operation on [0,1] with an exact rational implementation.
struct ScalarTNorm {
    std::string name;
    OpFamily family = OpFamily::Plain;
    std::function<Rational(const Rational&, const Rational&)> apply;
};

/// Registered operations: t-norms "min", "product", "lukasiewicz",
/// "drastic", and the t-conorm "max". Throws PreconditionError for an
/// unknown name.
const ScalarTNorm& builtinScalarOp(const std::string& name);
std::vector<std::string> builtinTNormNames();

/// Grid {0, 1/n, ..., 1}.
std::vector<Rational> unitGrid(unsigned steps);

/// Checks commutativity (T1), associativity (T2), monotonicity in both
/// arguments (T3) and the boundary law (T4 with neutral 1 for t-norms and
/// plain ops, T4' with neutral 0 for t-conorms) over all probe tuples.
PropertyReport checkTNormAxioms(const ScalarTNorm& op,
                                const std::vector<Rational>& probes);

/// Law: op(x,y) = 1 only at x = y = 1 (and op(1,1) = 1). Observational; the
/// report shows a witness when it fails.
PropertyReport unitPreimageIsCorner(const ScalarTNorm& op,
                                    const std::vector<Rational>& probes);

/// Heuristic continuity probe: on the (1/m)-grid, every single-step change
/// of either argument moves the result by at most 1/m. A sampled
/// Lipschitz-style check only, not a proof of continuity.
bool sampledContinuityHeuristic(const ScalarTNorm& op, unsigned resolution);

} // namespace t2f
