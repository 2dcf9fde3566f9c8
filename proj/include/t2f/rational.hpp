#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace t2f {

/// Exact rational number. Always held in canonical form (reduced, positive
/// denominator), so operator== is structural equality of values.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Accepts "p/q", a bare integer "p", or a terminating decimal such as
/// "0.25"; every form is converted exactly. Throws ParseError otherwise.
Rational parseRational(std::string_view text);

bool inUnitInterval(const Rational& v);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string formatRational(const Rational& v);

/// Fixed-point decimal rendering with round-half-up at the given number of
/// fractional digits, trailing zeros trimmed. Rendering only; never used in
/// computation.
std::string formatDecimal(const Rational& v, int digits);

} // namespace t2f
