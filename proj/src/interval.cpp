#include "t2f/interval.hpp"

#include "t2f/errors.hpp"

#include <algorithm>
#include <utility>

namespace t2f {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!inUnitInterval(lo) || !inUnitInterval(hi))
        throw InvariantError("interval endpoints outside [0,1]");
    if (lo > hi)
        throw InvariantError("interval endpoints out of order");
}

Interval meet(const Interval& x, const Interval& y) {
    return Interval(std::min(x.lo, y.lo), std::min(x.hi, y.hi));
}

Interval join(const Interval& x, const Interval& y) {
    return Interval(std::max(x.lo, y.lo), std::max(x.hi, y.hi));
}

bool leqProduct(const Interval& x, const Interval& y) {
    return x.lo <= y.lo && x.hi <= y.hi;
}

bool subsetOrder(const Interval& x, const Interval& y) {
    return y.lo <= x.lo && x.hi <= y.hi;
}

Interval circledStar(const Interval& x, const Interval& y) {
    Rational v = x.hi * y.hi;
    return Interval(v, v);
}

Interval convolutionIntervalTNorm(const ScalarOp& op, const Interval& x,
                                  const Interval& y) {
    return Interval(op(x.lo, y.lo), op(x.hi, y.hi));
}

std::vector<Rational> defaultProbeValues() {
    return {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
}

std::vector<Interval> intervalProbeGrid(const std::vector<Rational>& values) {
    std::vector<Interval> out;
    for (const Rational& a : values)
        for (const Rational& b : values)
            if (a <= b)
                out.emplace_back(a, b);
    return out;
}

std::string formatInterval(const Interval& iv) {
    return "[" + formatRational(iv.lo) + ", " + formatRational(iv.hi) + "]";
}

namespace {

std::string pairText(const Interval& x, const Interval& y) {
    return formatInterval(x) + ", " + formatInterval(y);
}

std::string tripleText(const Interval& x, const Interval& y, const Interval& z) {
    return pairText(x, y) + ", " + formatInterval(z);
}

} // namespace

PropertyReport checkDef2Conditions(const IntervalOp& op,
                                   const std::vector<Interval>& probes,
                                   const std::string& opName) {
    PropertyReport report;
    report.suite = "def2-conditions:" + opName;
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

    const Interval one(1, 1);
    const Interval top(0, 1);

    // (1) neutral element [1,1]
    {
        bool holds = true;
        std::string w;
        for (const Interval& x : probes)
            if (op(one, x) != x || op(x, one) != x) {
                holds = false;
                w = formatInterval(x);
                break;
            }
        record("cond1", holds, std::move(w));
    }
    // (2) commutativity
    {
        bool holds = true;
        std::string w;
        for (const Interval& x : probes) {
            for (const Interval& y : probes)
                if (op(x, y) != op(y, x)) {
                    holds = false;
                    w = pairText(x, y);
                    break;
                }
            if (!holds)
                break;
        }
        record("cond2", holds, std::move(w));
    }
    // (3) associativity
    {
        bool holds = true;
        std::string w;
        for (const Interval& x : probes) {
            for (const Interval& y : probes) {
                for (const Interval& z : probes)
                    if (op(op(x, y), z) != op(x, op(y, z))) {
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
        record("cond3", holds, std::move(w));
    }
    // (4) distributivity over join
    {
        bool holds = true;
        std::string w;
        for (const Interval& x : probes) {
            for (const Interval& y : probes) {
                for (const Interval& z : probes)
                    if (op(x, join(y, z)) != join(op(x, y), op(x, z))) {
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
        record("cond4", holds, std::move(w));
    }
    // (5) distributivity over meet
    {
        bool holds = true;
        std::string w;
        for (const Interval& x : probes) {
            for (const Interval& y : probes) {
                for (const Interval& z : probes)
                    if (op(x, meet(y, z)) != meet(op(x, y), op(x, z))) {
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
        record("cond5", holds, std::move(w));
    }
    // (6) annihilation against [0,1]: op([0,1],[a,b]) = [0,b]
    {
        bool holds = true;
        std::string w;
        for (const Interval& x : probes)
            if (op(top, x) != Interval(0, x.hi)) {
                holds = false;
                w = formatInterval(x);
                break;
            }
        record("cond6", holds, std::move(w));
    }
    // (7) closure on degenerate intervals
    {
        bool holds = true;
        std::string w;
        for (const Interval& x : probes) {
            if (!x.degenerate())
                continue;
            for (const Interval& y : probes) {
                if (!y.degenerate())
                    continue;
                if (!op(x, y).degenerate()) {
                    holds = false;
                    w = pairText(x, y);
                    break;
                }
            }
            if (!holds)
                break;
        }
        record("cond7", holds, std::move(w));
    }
    // (4') monotone for the product order
    {
        bool holds = true;
        std::string w;
        for (const Interval& x : probes) {
            for (const Interval& y : probes) {
                if (!leqProduct(x, y))
                    continue;
                for (const Interval& z : probes)
                    if (!leqProduct(op(z, x), op(z, y))) {
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
        record("cond4p", holds, std::move(w));
    }
    // (5') monotone for the containment order
    {
        bool holds = true;
        std::string w;
        for (const Interval& x : probes) {
            for (const Interval& y : probes) {
                if (!subsetOrder(x, y))
                    continue;
                for (const Interval& z : probes)
                    if (!subsetOrder(op(z, x), op(z, y))) {
                        holds = false;
                        w = tripleText(x, y, z) + " -> " +
                            pairText(op(z, x), op(z, y));
                        break;
                    }
                if (!holds)
                    break;
            }
            if (!holds)
                break;
        }
        record("cond5p", holds, std::move(w));
    }
    return report;
}

FactorSide singlePointFactorMeet(const Interval& x, const Interval& y) {
    if (!meet(x, y).degenerate())
        throw PreconditionError("meet of the arguments is not a single point");
    if (x.degenerate())
        return FactorSide::First;
    if (y.degenerate())
        return FactorSide::Second;
    throw InvariantError("degenerate meet without a degenerate factor");
}

FactorSide singlePointFactorJoin(const Interval& x, const Interval& y) {
    if (!join(x, y).degenerate())
        throw PreconditionError("join of the arguments is not a single point");
    if (x.degenerate())
        return FactorSide::First;
    if (y.degenerate())
        return FactorSide::Second;
    throw InvariantError("degenerate join without a degenerate factor");
}

} // namespace t2f
