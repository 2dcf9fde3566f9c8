#include "t2f/scalar.hpp"

#include "t2f/errors.hpp"

#include <algorithm>

namespace t2f {

namespace {

Rational applyMin(const Rational& x, const Rational& y) {
    return std::min(x, y);
}

Rational applyMax(const Rational& x, const Rational& y) {
    return std::max(x, y);
}

Rational applyProduct(const Rational& x, const Rational& y) {
    return x * y;
}

Rational applyLukasiewicz(const Rational& x, const Rational& y) {
    return std::max(Rational(0), x + y - 1);
}

Rational applyDrastic(const Rational& x, const Rational& y) {
    if (x == 1)
        return y;
    if (y == 1)
        return x;
    return 0;
}

const std::vector<ScalarTNorm>& registry() {
    static const std::vector<ScalarTNorm> ops = {
        {"min", OpFamily::TNorm, applyMin},
        {"product", OpFamily::TNorm, applyProduct},
        {"lukasiewicz", OpFamily::TNorm, applyLukasiewicz},
        {"drastic", OpFamily::TNorm, applyDrastic},
        {"max", OpFamily::TConorm, applyMax},
    };
    return ops;
}

std::string pairText(const Rational& x, const Rational& y) {
    return "(" + formatRational(x) + ", " + formatRational(y) + ")";
}

std::string tripleText(const Rational& x, const Rational& y, const Rational& z) {
    return "(" + formatRational(x) + ", " + formatRational(y) + ", " +
           formatRational(z) + ")";
}

} // namespace

const ScalarTNorm& builtinScalarOp(const std::string& name) {
    for (const ScalarTNorm& op : registry())
        if (op.name == name)
            return op;
    throw PreconditionError("unknown scalar operation '" + name + "'");
}

std::vector<std::string> builtinTNormNames() {
    std::vector<std::string> names;
    for (const ScalarTNorm& op : registry())
        if (op.family == OpFamily::TNorm)
            names.push_back(op.name);
    return names;
}

std::vector<Rational> unitGrid(unsigned steps) {
    if (steps == 0)
        throw PreconditionError("unitGrid needs at least one step");
    std::vector<Rational> grid;
    for (unsigned k = 0; k <= steps; ++k)
        grid.emplace_back(k, steps);
    return grid;
}

PropertyReport checkTNormAxioms(const ScalarTNorm& op,
                                const std::vector<Rational>& probes) {
    PropertyReport report;
    report.suite = "tnorm-axioms:" + op.name;
    report.trials = probes.size();

    auto record = [&](const std::string& id, bool holds, std::string witness) {
        LawResult law;
        law.id = id;
        law.status = holds ? "PASS" : "FAIL";
        law.ok = holds;
        if (!holds)
            law.witness = std::move(witness);
        report.laws.push_back(std::move(law));
    };

    {
        bool holds = true;
        std::string w;
        for (const Rational& x : probes) {
            for (const Rational& y : probes)
                if (op.apply(x, y) != op.apply(y, x)) {
                    holds = false;
                    w = pairText(x, y);
                    break;
                }
            if (!holds)
                break;
        }
        record("T1", holds, std::move(w));
    }
    {
        bool holds = true;
        std::string w;
        for (const Rational& x : probes) {
            for (const Rational& y : probes) {
                for (const Rational& z : probes)
                    if (op.apply(op.apply(x, y), z) != op.apply(x, op.apply(y, z))) {
                        holds = false;
                        w = tripleText(x, y, z);
                        break;
                    }
                if (!holds)
                    break;
            }
            if (!holds)
                break;
        }
        record("T2", holds, std::move(w));
    }
    {
        bool holds = true;
        std::string w;
        for (const Rational& x : probes) {
            for (const Rational& y : probes) {
                if (x > y)
                    continue;
                for (const Rational& z : probes)
                    if (op.apply(x, z) > op.apply(y, z) ||
                        op.apply(z, x) > op.apply(z, y)) {
                        holds = false;
                        w = tripleText(x, y, z);
                        break;
                    }
                if (!holds)
                    break;
            }
            if (!holds)
                break;
        }
        record("T3", holds, std::move(w));
    }
    {
        const bool conorm = op.family == OpFamily::TConorm;
        const Rational neutral = conorm ? 0 : 1;
        bool holds = true;
        std::string w;
        for (const Rational& x : probes)
            if (op.apply(x, neutral) != x || op.apply(neutral, x) != x) {
                holds = false;
                w = formatRational(x);
                break;
            }
        record(conorm ? "T4'" : "T4", holds, std::move(w));
    }
    return report;
}

PropertyReport unitPreimageIsCorner(const ScalarTNorm& op,
                                    const std::vector<Rational>& probes) {
    PropertyReport report;
    report.suite = "unit-preimage-corner:" + op.name;
    report.trials = probes.size();

    bool holds = op.apply(1, 1) == 1;
    std::string w = holds ? "" : "op(1,1) != 1";
    if (holds) {
        for (const Rational& x : probes) {
            for (const Rational& y : probes)
                if (op.apply(x, y) == 1 && !(x == 1 && y == 1)) {
                    holds = false;
                    w = pairText(x, y);
                    break;
                }
            if (!holds)
                break;
        }
    }
    LawResult law;
    law.id = "unit-preimage-corner";
    law.status = holds ? "PASS" : "FAIL";
    law.ok = holds;
    law.witness = std::move(w);
    report.laws.push_back(std::move(law));
    return report;
}

bool sampledContinuityHeuristic(const ScalarTNorm& op, unsigned resolution) {
    if (resolution < 2)
        throw PreconditionError("resolution must be at least 2");
    const Rational step(1, resolution);
    std::vector<Rational> grid = unitGrid(resolution);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            Rational here = op.apply(grid[i], grid[j]);
            if (i + 1 < grid.size()) {
                Rational d = op.apply(grid[i + 1], grid[j]) - here;
                if (d > step || d < -step)
                    return false;
            }
            if (j + 1 < grid.size()) {
                Rational d = op.apply(grid[i], grid[j + 1]) - here;
                if (d > step || d < -step)
                    return false;
            }
        }
    }
    return true;
}

} // namespace t2f
