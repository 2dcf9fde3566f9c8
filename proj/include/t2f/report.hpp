#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace t2f {

/// Outcome of one law inside a suite run. `status` is "PASS", "FAIL" or
/// "WITNESS" (a sought counterexample that was found); `ok` is whether the
/// law counts as satisfied for the suite verdict. The witness, expected and
/// actual fields hold serialized values and are empty when not applicable.
struct LawResult {
    std::string id;
    std::string status;
    bool ok = true;
    std::optional<std::uint64_t> trial;
    std::string witness;
    std::string expected;
    std::string actual;
};

/// Deterministic record of a suite run. Two runs with the same seed and
/// trial count serialize to byte-identical text.
struct PropertyReport {
    std::string suite;
    std::string mode = "expect-pass"; // or "expect-witness"
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::string generatorNote; // omitted from output when empty
    std::vector<LawResult> laws;

    bool passed() const;
    const LawResult* find(const std::string& id) const;

    /// One law per line: "law <id> <status> [trial=N] [expected=..]
    /// [actual=..] [witness=..]", framed by suite metadata and a final
    /// "result:" line.
    std::string toText() const;

    /// Same content, one JSON object per line.
    std::string toJsonLines() const;
};

} // namespace t2f
