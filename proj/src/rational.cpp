#include "t2f/rational.hpp"

#include "t2f/errors.hpp"

#include <algorithm>
#include <cctype>

namespace t2f {

namespace {

bool allDigits(std::string_view s) {
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parseDigits(std::string_view digits, std::string_view whole) {
    if (!allDigits(digits))
        throw ParseError("not a rational literal: '" + std::string(whole) + "'");
    return BigInt(std::string(digits));
}

} // namespace

Rational parseRational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parseDigits(text.substr(0, slash), text);
        BigInt den = parseDigits(text.substr(slash + 1), text);
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view intPart = text.substr(0, dot);
        std::string_view fracPart = text.substr(dot + 1);
        if (fracPart.empty())
            throw ParseError("missing fractional digits in '" + std::string(text) + "'");
        BigInt whole = intPart.empty() ? BigInt(0) : parseDigits(intPart, text);
        BigInt frac = parseDigits(fracPart, text);
        BigInt scale = pow(BigInt(10), static_cast<unsigned>(fracPart.size()));
        return Rational(whole * scale + frac, scale);
    }
    return Rational(parseDigits(text, text));
}

bool inUnitInterval(const Rational& v) {
    return v >= 0 && v <= 1;
}

std::string formatRational(const Rational& v) {
    std::string s = numerator(v).str();
    if (denominator(v) != 1) {
        s += '/';
        s += denominator(v).str();
    }
    return s;
}

std::string formatDecimal(const Rational& v, int digits) {
    if (digits < 0)
        throw DomainError("negative precision");
    const bool negative = v < 0;
    const Rational a = negative ? Rational(-v) : v;
    BigInt scale = pow(BigInt(10), static_cast<unsigned>(digits));
    BigInt scaled = numerator(a) * scale;
    BigInt q = scaled / denominator(a);
    BigInt r = scaled % denominator(a);
    if (2 * r >= denominator(a))
        ++q;
    std::string intPart = BigInt(q / scale).str();
    std::string fracPart = BigInt(q % scale).str();
    if (digits > 0) {
        fracPart.insert(fracPart.begin(), digits - fracPart.size(), '0');
        while (!fracPart.empty() && fracPart.back() == '0')
            fracPart.pop_back();
    }
    std::string out = negative && (q != 0) ? "-" : "";
    out += intPart;
    if (!fracPart.empty()) {
        out += '.';
        out += fracPart;
    }
    return out;
}

} // namespace t2f
