#include "t2f/convolution.hpp"

#include "t2f/envelope.hpp"
#include "t2f/errors.hpp"

#include <algorithm>
#include <utility>

namespace t2f {

PiecewiseFn meetConv(const PiecewiseFn& f, const PiecewiseFn& g) {
    return pointwiseMax(pointwiseMin(f, rightEnvelope(g)),
                        pointwiseMin(g, rightEnvelope(f)));
}

PiecewiseFn joinConv(const PiecewiseFn& f, const PiecewiseFn& g) {
    return pointwiseMax(pointwiseMin(f, leftEnvelope(g)),
                        pointwiseMin(g, leftEnvelope(f)));
}

PiecewiseFn negation(const PiecewiseFn& f) {
    return reflect(f);
}

PiecewiseFn barMeet(const PiecewiseFn& f, const PiecewiseFn& g) {
    return withValueAtOne(meetConv(f, g), 0);
}

PiecewiseFn starOp(const PiecewiseFn& f, const PiecewiseFn& g) {
    auto requireConvexNormal = [](const PiecewiseFn& h, const char* which) {
        if (!isNormal(h))
            throw PreconditionError(std::string("starOp: ") + which +
                                    " argument is not normal");
        if (!isConvex(h))
            throw PreconditionError(std::string("starOp: ") + which +
                                    " argument is not convex");
    };
    requireConvexNormal(f, "first");
    requireConvexNormal(g, "second");

    const PiecewiseFn unit = PiecewiseFn::unit();
    if (f == unit)
        return g;
    if (g == unit)
        return f;
    if (std::min(f.evalAt(1), g.evalAt(1)) == 1)
        return meetConv(f, g);
    return barMeet(f, g);
}

ConvolutionSpec::ConvolutionSpec(ScalarTNorm c, ScalarTNorm k, Direction d)
    : combiner(std::move(c)), carrier(std::move(k)), direction(d) {
    if (direction == Direction::Norm && carrier.family != OpFamily::TNorm)
        throw InvariantError("norm-direction convolution needs a t-norm carrier");
    if (direction == Direction::Conorm && carrier.family != OpFamily::TConorm)
        throw InvariantError("conorm-direction convolution needs a t-conorm carrier");
}

SampledFn generalConvolution(const ConvolutionSpec& spec, const PiecewiseFn& f,
                             const PiecewiseFn& g, unsigned resolution) {
    if (resolution < 2)
        throw PreconditionError("resolution must be at least 2");

    SampledFn out;
    if (spec.combiner.name == "min" &&
        (spec.carrier.name == "min" || spec.carrier.name == "max")) {
        PiecewiseFn exact = spec.carrier.name == "min" ? meetConv(f, g)
                                                       : joinConv(f, g);
        for (unsigned k = 0; k <= resolution; ++k) {
            Rational x(k, resolution);
            out.points.emplace_back(x, exact.evalAt(x));
        }
        out.exact = true;
        return out;
    }

    std::vector<Rational> grid = unitGrid(resolution);
    std::vector<Rational> fv, gv;
    fv.reserve(grid.size());
    gv.reserve(grid.size());
    for (const Rational& t : grid) {
        fv.push_back(f.evalAt(t));
        gv.push_back(g.evalAt(t));
    }
    std::vector<std::pair<Rational, Rational>> pairs; // (carrier value, combined)
    pairs.reserve(grid.size() * grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid.size(); ++j)
            pairs.emplace_back(spec.carrier.apply(grid[i], grid[j]),
                               spec.combiner.apply(fv[i], gv[j]));

    const Rational halfBand(1, 2 * static_cast<unsigned long long>(resolution));
    for (unsigned k = 0; k <= resolution; ++k) {
        Rational x(k, resolution);
        Rational best(0);
        for (const auto& [c, v] : pairs) {
            Rational d = c - x;
            if (d < 0)
                d = -d;
            if (d <= halfBand && v > best)
                best = v;
        }
        out.points.emplace_back(x, best);
    }
    return out;
}

Rational convolutionAtOne(const ConvolutionSpec& spec, const PiecewiseFn& f,
                          const PiecewiseFn& g) {
    if (spec.carrier.family != OpFamily::TNorm)
        throw PreconditionError("convolutionAtOne requires a t-norm carrier");
    return spec.combiner.apply(f.evalAt(1), g.evalAt(1));
}

bool orderMeet(const PiecewiseFn& f, const PiecewiseFn& g) {
    if (isNormal(f) && isConvex(f) && isNormal(g) && isConvex(g))
        return leq(leftEnvelope(g), leftEnvelope(f)) &&
               leq(rightEnvelope(f), rightEnvelope(g));
    return meetConv(f, g) == f;
}

bool orderJoin(const PiecewiseFn& f, const PiecewiseFn& g) {
    return joinConv(f, g) == g;
}

Q1Report counterexampleQ1() {
    Q1Report r{Interval::point(Rational(1, 2)),
               Interval(Rational(1, 2), 1),
               Interval::point(Rational(1, 2)),
               Interval::point(0),
               Interval::point(0),
               false,
               false};
    r.zx = circledStar(r.z, r.x);
    r.zy = circledStar(r.z, r.y);
    r.premiseSubset = subsetOrder(r.x, r.y);
    r.conclusionSubset = subsetOrder(r.zx, r.zy);
    return r;
}

std::string Q1Report::toText() const {
    auto yesno = [](bool b) { return b ? "yes" : "no"; };
    std::string out;
    out += "question 1: do endpoint monotonicity (4)+(5) imply containment "
           "monotonicity (5')?\n";
    out += "x = " + formatInterval(x) + "\n";
    out += "y = " + formatInterval(y) + "\n";
    out += "z = " + formatInterval(z) + "\n";
    out += std::string("x subset-of y: ") + yesno(premiseSubset) + "\n";
    out += "z (*) x = " + formatInterval(zx) + "\n";
    out += "z (*) y = " + formatInterval(zy) + "\n";
    out += std::string("z (*) x subset-of z (*) y: ") + yesno(conclusionSubset) + "\n";
    out += violated() ? "(5') VIOLATED\n" : "(5') holds on this triple\n";
    return out;
}

Q2Report counterexampleQ2() {
    Q2Report r{PiecewiseFn::indicatorInterval(0, 1),
               PiecewiseFn::fromBreakpoints({
                   {Rational(0), std::nullopt, Rational(0), Rational(0)},
                   {Rational(1, 2), Rational(1), Rational(1), Rational(1)},
                   {Rational(1), Rational(1, 2), Rational(1, 2), std::nullopt},
               }),
               {}};
    const Rational starAtOne = starOp(r.f, r.g).evalAt(1);
    for (const std::string& cb : builtinTNormNames()) {
        if (cb == "drastic")
            continue;
        for (const std::string& ca : builtinTNormNames()) {
            if (ca == "drastic")
                continue;
            ConvolutionSpec spec(builtinScalarOp(cb), builtinScalarOp(ca),
                                 Direction::Norm);
            r.rows.push_back({cb, ca, convolutionAtOne(spec, r.f, r.g), starAtOne});
        }
    }
    return r;
}

bool Q2Report::allDiffer() const {
    return !rows.empty() &&
           std::all_of(rows.begin(), rows.end(),
                       [](const Q2Row& row) { return row.convAtOne != row.starAtOne; });
}

std::string Q2Report::toText() const {
    std::string out;
    out += "question 2: is the lattice-ordered t-norm on normal convex "
           "functions a convolution of a scalar t-norm?\n";
    out += "f = indicator of [0,1]; f(1) = " + formatRational(f.evalAt(1)) + "\n";
    out += "g = triangle with peak 1 at 1/2; g(1) = " + formatRational(g.evalAt(1)) +
           "\n";
    if (!rows.empty())
        out += "star(f,g)(1) = " + formatRational(rows.front().starAtOne) + "\n";
    for (const Q2Row& row : rows) {
        out += "conv-at-one(combiner=" + row.combiner + ", carrier=" + row.carrier +
               ") = " + formatRational(row.convAtOne);
        out += row.convAtOne == row.starAtOne ? " == star value\n"
                                              : " != star value\n";
    }
    out += allDiffer() ? "no listed combiner/carrier pair reproduces star at 1\n"
                       : "some combiner/carrier pair matches star at 1\n";
    return out;
}

} // namespace t2f
