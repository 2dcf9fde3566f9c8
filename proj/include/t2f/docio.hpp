#pragma once

#include "t2f/interval.hpp"
#include "t2f/piecewise.hpp"

#include <string>

namespace t2f {

/// A parsed function document: optional name plus the function itself.
struct FunctionDocument {
    std::string name;
    PiecewiseFn fn;
};

/// Parses a JSON function document:
///
///   { "name": "tent",
///     "breakpoints": [ {"x": "0", "value": "0", "right": "0"},
///                      {"x": "1/2", "value": "1"},
///                      {"x": "1", "left": "1/2", "value": "1/2"} ] }
///
/// Rationals are strings "p/q", "p" or exact terminating decimals; the JSON
/// numbers 0 and 1 are also accepted. Interior breakpoints may omit "left"
/// or "right", which reads as continuous (equal to "value"). Errors carry
/// the byte position (syntax) or the violated invariant and breakpoint
/// index (validation).
FunctionDocument parseFunction(const std::string& text);

/// Canonical serialization; parseFunction(serializeFunction(d)) == d.
std::string serializeFunction(const FunctionDocument& doc, bool pretty = true);

/// "[p/q, r/s]" with optional inner whitespace.
Interval parseInterval(const std::string& text);

/// CSV with header "x,left,value": one row per sample point x = k/points for
/// k = 0..points, merged with one row per breakpoint not on that grid. The
/// left column is filled only at breakpoints (their stored left limit);
/// values are decimal renderings at the given precision of exact
/// evaluations. Requires points >= 1.
std::string sampleCsv(const PiecewiseFn& f, unsigned points, int precision);

} // namespace t2f
