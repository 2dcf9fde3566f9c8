#include "t2f/envelope.hpp"

#include "t2f/errors.hpp"

#include <algorithm>
#include <utility>

namespace t2f {

PiecewiseFn leftEnvelope(const PiecewiseFn& f) {
    const auto& bps = f.breakpoints();
    std::vector<Breakpoint> out;
    Rational run = bps.front().value; // sup over [0, current x]
    out.push_back({Rational(0), std::nullopt, run, std::nullopt});

    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const Rational& u = bps[i].x;
        const Rational& v = bps[i + 1].x;
        const Rational fu = *bps[i].right;
        const Rational fv = *bps[i + 1].left;
        const Rational ru = run;
        out.back().right = std::max(ru, fu);

        Rational leftAtV;
        if (fu < fv) {
            if (ru <= fu) {
                leftAtV = fv; // the rising piece carries the envelope
            } else if (ru >= fv) {
                leftAtV = ru; // running sup dominates the whole piece
            } else {
                // Constant ru until the piece catches up, then the piece.
                Rational xc = u + (ru - fu) * (v - u) / (fv - fu);
                out.push_back({xc, ru, ru, ru});
                leftAtV = fv;
            }
        } else {
            leftAtV = std::max(ru, fu);
        }
        run = std::max(leftAtV, bps[i + 1].value);
        out.push_back({v, leftAtV, run, std::nullopt});
    }
    return PiecewiseFn::fromBreakpoints(std::move(out));
}

PiecewiseFn rightEnvelope(const PiecewiseFn& f) {
    return reflect(leftEnvelope(reflect(f)));
}

PiecewiseFn weakLeftEnvelope(const PiecewiseFn& f) {
    // The weak envelope is the left limit of the strong one on (0,1] and
    // f(0) at 0, so only point values at breakpoints change.
    std::vector<Breakpoint> bps = leftEnvelope(f).breakpoints();
    for (Breakpoint& b : bps)
        if (b.left)
            b.value = *b.left;
    return PiecewiseFn::fromBreakpoints(std::move(bps));
}

PiecewiseFn weakRightEnvelope(const PiecewiseFn& f) {
    return reflect(weakLeftEnvelope(reflect(f)));
}

bool isNormal(const PiecewiseFn& f) {
    return f.supValue() == 1;
}

bool isConvex(const PiecewiseFn& f) {
    return f == pointwiseMin(leftEnvelope(f), rightEnvelope(f));
}

namespace {

void requireNormal(const PiecewiseFn& f, const char* op) {
    if (!isNormal(f))
        throw PreconditionError(std::string(op) + " requires a normal function");
}

// inf{x : E(x) = 1} for an increasing envelope E of a normal function:
// the first breakpoint whose value, or right limit, reaches 1.
Rational firstReachesOne(const PiecewiseFn& env) {
    for (const Breakpoint& b : env.breakpoints()) {
        if (b.value == 1)
            return b.x;
        if (b.right && *b.right == 1)
            return b.x;
    }
    throw InvariantError("envelope of a normal function never reaches 1");
}

// sup of the agreement set {x : f(x) = g(x)}, given that f(0) = g(0) makes
// it nonempty. Scans the refined common grid from the right; inside a cell
// the two graphs are either identical lines or disjoint.
Rational agreementSup(const PiecewiseFn& f, const PiecewiseFn& g) {
    std::vector<Rational> xs = detail::refinedGrid(f, g);
    for (std::size_t k = xs.size(); k-- > 0;) {
        if (f.evalAt(xs[k]) == g.evalAt(xs[k]))
            return xs[k];
        if (k > 0) {
            Rational mid = (xs[k - 1] + xs[k]) / 2;
            if (f.evalAt(mid) == g.evalAt(mid))
                return xs[k]; // identical on the open cell; sup is its end
        }
    }
    throw InvariantError("empty agreement set");
}

} // namespace

BalanceData balanceData(const PiecewiseFn& f) {
    requireNormal(f, "balanceData");
    BalanceData d;
    d.l1 = firstReachesOne(leftEnvelope(f));
    d.r1 = 1 - firstReachesOne(leftEnvelope(reflect(f)));
    d.bf = agreementSup(f, leftEnvelope(f));
    PiecewiseFn r = reflect(f);
    d.cf = 1 - agreementSup(r, leftEnvelope(r));
    return d;
}

PiecewiseFn convexProfile(const PiecewiseFn& f) {
    requireNormal(f, "convexProfile");
    if (!isConvex(f))
        throw PreconditionError("convexProfile requires a convex function");
    const BalanceData d = balanceData(f);
    const PiecewiseFn env = leftEnvelope(f);
    const PiecewiseFn renv = rightEnvelope(f);

    std::vector<Breakpoint> out;
    for (const Breakpoint& b : env.breakpoints())
        if (b.x < d.l1)
            out.push_back(b);

    Breakpoint atL1;
    atL1.x = d.l1;
    if (d.l1 > 0)
        atL1.left = env.leftLimitAt(d.l1);
    atL1.value = f.evalAt(d.l1);
    if (d.l1 < 1)
        atL1.right = (d.l1 < d.r1) ? Rational(1) : renv.rightLimitAt(d.r1);
    out.push_back(std::move(atL1));

    if (d.r1 > d.l1) {
        Breakpoint atR1;
        atR1.x = d.r1;
        atR1.left = 1;
        atR1.value = f.evalAt(d.r1);
        if (d.r1 < 1)
            atR1.right = renv.rightLimitAt(d.r1);
        out.push_back(std::move(atR1));
    }

    for (const Breakpoint& b : renv.breakpoints())
        if (b.x > d.r1)
            out.push_back(b);
    if (out.back().x != 1)
        throw InvariantError("profile assembly lost the endpoint");

    PiecewiseFn rebuilt = PiecewiseFn::fromBreakpoints(std::move(out));
    if (rebuilt != f)
        throw InvariantError("five-branch profile does not reproduce the function");
    return rebuilt;
}

} // namespace t2f
