#include "t2f/docio.hpp"

#include "t2f/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <utility>

namespace t2f {

namespace {

using json = nlohmann::ordered_json;

Rational gradeFromJson(const json& v, const char* field, std::size_t index) {
    const std::string where =
        std::string(field) + " (breakpoint " + std::to_string(index) + ")";
    if (v.is_string())
        return parseRational(v.get<std::string>());
    if (v.is_number_integer()) {
        auto n = v.get<long long>();
        if (n == 0 || n == 1)
            return Rational(n);
        throw ParseError("integer out of range in " + where);
    }
    if (v.is_number())
        throw ParseError("non-integer JSON number in " + where +
                         "; use a string such as \"1/3\" or \"0.25\"");
    throw ParseError("expected a rational literal in " + where);
}

json gradeToJson(const Rational& v) {
    return formatRational(v);
}

} // namespace

FunctionDocument parseFunction(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
    if (!doc.is_object())
        throw ParseError("function document must be a JSON object");
    if (!doc.contains("breakpoints") || !doc["breakpoints"].is_array())
        throw ParseError("function document needs a \"breakpoints\" array");

    FunctionDocument out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw ParseError("\"name\" must be a string");
        out.name = doc["name"].get<std::string>();
    }

    std::vector<Breakpoint> bps;
    std::size_t index = 0;
    for (const json& rec : doc["breakpoints"]) {
        if (!rec.is_object())
            throw ParseError("breakpoint " + std::to_string(index) +
                             " is not an object");
        for (const auto& [key, _] : rec.items())
            if (key != "x" && key != "left" && key != "value" && key != "right")
                throw ParseError("unknown field \"" + key + "\" in breakpoint " +
                                 std::to_string(index));
        if (!rec.contains("x") || !rec.contains("value"))
            throw ParseError("breakpoint " + std::to_string(index) +
                             " needs \"x\" and \"value\"");
        Breakpoint bp;
        bp.x = gradeFromJson(rec["x"], "x", index);
        bp.value = gradeFromJson(rec["value"], "value", index);
        if (rec.contains("left"))
            bp.left = gradeFromJson(rec["left"], "left", index);
        else if (bp.x != 0)
            bp.left = bp.value; // omitted limit reads as continuous
        if (rec.contains("right"))
            bp.right = gradeFromJson(rec["right"], "right", index);
        else if (bp.x != 1)
            bp.right = bp.value;
        bps.push_back(std::move(bp));
        ++index;
    }
    try {
        out.fn = PiecewiseFn::fromBreakpoints(std::move(bps));
    } catch (const InvariantError& e) {
        throw ParseError(std::string("invalid function document: ") + e.what());
    }
    return out;
}

std::string serializeFunction(const FunctionDocument& doc, bool pretty) {
    json root;
    if (!doc.name.empty())
        root["name"] = doc.name;
    json arr = json::array();
    for (const Breakpoint& bp : doc.fn.breakpoints()) {
        json rec;
        rec["x"] = gradeToJson(bp.x);
        if (bp.left)
            rec["left"] = gradeToJson(*bp.left);
        rec["value"] = gradeToJson(bp.value);
        if (bp.right)
            rec["right"] = gradeToJson(*bp.right);
        arr.push_back(std::move(rec));
    }
    root["breakpoints"] = std::move(arr);
    return pretty ? root.dump(2) + "\n" : root.dump();
}

Interval parseInterval(const std::string& text) {
    std::string s;
    std::copy_if(text.begin(), text.end(), std::back_inserter(s),
                 [](unsigned char c) { return !std::isspace(c); });
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("interval literal must look like \"[p/q, r/s]\": '" +
                         text + "'");
    s = s.substr(1, s.size() - 2);
    auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw ParseError("interval literal needs exactly one comma: '" + text + "'");
    Rational lo = parseRational(s.substr(0, comma));
    Rational hi = parseRational(s.substr(comma + 1));
    try {
        return Interval(lo, hi);
    } catch (const InvariantError& e) {
        throw ParseError(std::string("invalid interval: ") + e.what());
    }
}

std::string sampleCsv(const PiecewiseFn& f, unsigned points, int precision) {
    if (points == 0)
        throw PreconditionError("sample needs at least one point");
    std::vector<Rational> xs;
    for (unsigned k = 0; k <= points; ++k)
        xs.emplace_back(k, points);
    for (const Breakpoint& bp : f.breakpoints())
        xs.push_back(bp.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    const auto& bps = f.breakpoints();
    std::string out = "x,left,value\n";
    for (const Rational& x : xs) {
        auto it = std::lower_bound(bps.begin(), bps.end(), x,
                                   [](const Breakpoint& b, const Rational& v) {
                                       return b.x < v;
                                   });
        const bool isBp = it != bps.end() && it->x == x;
        out += formatDecimal(x, precision);
        out += ',';
        if (isBp && it->left)
            out += formatDecimal(*it->left, precision);
        out += ',';
        out += formatDecimal(f.evalAt(x), precision);
        out += '\n';
    }
    return out;
}

} // namespace t2f
