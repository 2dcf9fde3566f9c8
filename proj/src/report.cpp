#include "t2f/report.hpp"

#include <json.hpp>

#include <algorithm>

namespace t2f {

bool PropertyReport::passed() const {
    return std::all_of(laws.begin(), laws.end(),
                       [](const LawResult& l) { return l.ok; });
}

const LawResult* PropertyReport::find(const std::string& id) const {
    for (const LawResult& l : laws)
        if (l.id == id)
            return &l;
    return nullptr;
}

std::string PropertyReport::toText() const {
    std::string out;
    out += "suite: " + suite + "\n";
    out += "mode: " + mode + "\n";
    out += "seed: " + std::to_string(seed) + "\n";
    out += "trials: " + std::to_string(trials) + "\n";
    if (!generatorNote.empty())
        out += "generator: " + generatorNote + "\n";
    for (const LawResult& l : laws) {
        out += "law " + l.id + " " + l.status;
        if (l.trial)
            out += " trial=" + std::to_string(*l.trial);
        if (!l.expected.empty())
            out += " expected=" + l.expected;
        if (!l.actual.empty())
            out += " actual=" + l.actual;
        if (!l.witness.empty())
            out += " witness=" + l.witness;
        out += "\n";
    }
    out += std::string("result: ") + (passed() ? "PASS" : "FAIL") + "\n";
    return out;
}

std::string PropertyReport::toJsonLines() const {
    using json = nlohmann::ordered_json;
    std::string out;
    json head;
    head["suite"] = suite;
    head["mode"] = mode;
    head["seed"] = seed;
    head["trials"] = trials;
    if (!generatorNote.empty())
        head["generator"] = generatorNote;
    out += head.dump() + "\n";
    for (const LawResult& l : laws) {
        json row;
        row["law"] = l.id;
        row["status"] = l.status;
        if (l.trial)
            row["trial"] = *l.trial;
        if (!l.expected.empty())
            row["expected"] = l.expected;
        if (!l.actual.empty())
            row["actual"] = l.actual;
        if (!l.witness.empty())
            row["witness"] = json::parse(l.witness, nullptr, false).is_discarded()
                                 ? json(l.witness)
                                 : json::parse(l.witness);
        out += row.dump() + "\n";
    }
    json tail;
    tail["result"] = passed() ? "PASS" : "FAIL";
    out += tail.dump() + "\n";
    return out;
}

} // namespace t2f
