#include "t2f/generate.hpp"

#include "t2f/envelope.hpp"
#include "t2f/errors.hpp"

#include <algorithm>
#include <utility>

namespace t2f {

std::string GeneratorConfig::note() const {
    return "maxBreakpoints=" + std::to_string(maxBreakpoints) +
           " denominatorBound=" + std::to_string(denominatorBound) +
           " unitMass=" + formatRational(unitMass) +
           " endpointJumpMass=" + formatRational(endpointJumpMass);
}

bool Rng::chance(const Rational& p) {
    std::uint64_t r = next();
    if (p <= 0)
        return false;
    if (p >= 1)
        return true;
    BigInt threshold = (numerator(p) << 64) / denominator(p);
    return BigInt(r) < threshold;
}

Rational Rng::grade(unsigned denominatorBound, bool allowOne) {
    std::uint64_t d = 1 + below(denominatorBound);
    std::uint64_t k = below(allowOne ? d + 1 : d);
    return Rational(k, d);
}

namespace {

// Distinct abscissas strictly between 0 and end.
std::vector<Rational> interiorPoints(Rng& rng, const GeneratorConfig& cfg,
                                     unsigned count, const Rational& end) {
    std::vector<Rational> xs;
    for (unsigned i = 0; i < count; ++i) {
        Rational t = rng.grade(cfg.denominatorBound, false);
        if (t == 0)
            continue;
        xs.push_back(t * end);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::vector<Rational> sortedGrades(Rng& rng, const GeneratorConfig& cfg,
                                   std::size_t count, bool ascending) {
    std::vector<Rational> gs;
    gs.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        gs.push_back(rng.grade(cfg.denominatorBound, false));
    std::sort(gs.begin(), gs.end());
    if (!ascending)
        std::reverse(gs.begin(), gs.end());
    return gs;
}

} // namespace

PiecewiseFn drawNormalConvex(Rng& rng, const GeneratorConfig& cfg,
                             std::optional<bool> endpointOne) {
    if (rng.chance(cfg.unitMass) && endpointOne.value_or(true))
        return PiecewiseFn::unit();

    Rational xi1 = rng.grade(cfg.denominatorBound, true);
    Rational xi2 = rng.grade(cfg.denominatorBound, true);
    if (xi1 > xi2)
        std::swap(xi1, xi2);
    if (endpointOne == true)
        xi2 = 1;
    if (endpointOne == false && xi1 == 1)
        xi1 = rng.grade(cfg.denominatorBound, false); // keep a breakpoint with value 1 below x = 1
    bool drop;
    if (endpointOne == true)
        drop = false;
    else if (endpointOne == false)
        drop = xi2 == 1 || rng.chance(cfg.endpointJumpMass);
    else
        drop = xi1 < 1 && rng.chance(cfg.endpointJumpMass);

    const unsigned branchPoints = cfg.maxBreakpoints >= 4
                                      ? (cfg.maxBreakpoints - 2) / 2
                                      : 0;

    std::vector<Breakpoint> bps;

    if (xi1 > 0) {
        std::vector<Rational> xs =
            interiorPoints(rng, cfg, rng.below(branchPoints + 1), xi1);
        std::vector<Rational> gs = sortedGrades(rng, cfg, 3 * (xs.size() + 1), true);
        std::size_t gi = 0;
        Breakpoint first;
        first.x = 0;
        first.value = gs[gi++];
        first.right = gs[gi++];
        bps.push_back(std::move(first));
        for (const Rational& x : xs) {
            Breakpoint bp;
            bp.x = x;
            bp.left = gs[gi++];
            bp.value = gs[gi++];
            bp.right = gs[gi++];
            bps.push_back(std::move(bp));
        }
        Breakpoint peak;
        peak.x = xi1;
        peak.left = rng.chance(Rational(1, 2)) ? Rational(1) : gs[gi]; // continuous rise or a jump
        ++gi;
        peak.value = 1;
        if (xi1 < 1)
            peak.right = 1; // plateau (or the right branch overwrites below)
        bps.push_back(std::move(peak));
    } else {
        Breakpoint first;
        first.x = 0;
        first.value = 1;
        first.right = 1;
        bps.push_back(std::move(first));
    }

    if (xi2 > xi1) {
        Breakpoint bp;
        bp.x = xi2;
        bp.left = 1;
        bp.value = 1;
        bps.push_back(std::move(bp));
    }

    if (xi2 < 1) {
        std::vector<Rational> xs =
            interiorPoints(rng, cfg, rng.below(branchPoints + 1), 1 - xi2);
        for (Rational& x : xs)
            x = 1 - x;
        std::sort(xs.begin(), xs.end());
        std::vector<Rational> gs = sortedGrades(rng, cfg, 3 * (xs.size() + 1), false);
        std::size_t gi = 0;
        bps.back().right = gs[gi++];
        for (const Rational& x : xs) {
            Breakpoint bp;
            bp.x = x;
            bp.left = gs[gi++];
            bp.value = gs[gi++];
            bp.right = gs[gi++];
            bps.push_back(std::move(bp));
        }
        Breakpoint last;
        last.x = 1;
        last.left = gs[gi++];
        last.value = *last.left;
        bps.push_back(std::move(last));
    }

    if (drop) {
        Rational ll = bps.back().left ? *bps.back().left : Rational(1);
        if (ll > 0)
            bps.back().value = ll * rng.grade(cfg.denominatorBound, false);
    }
    if (endpointOne == false && bps.back().value == 1)
        bps.back().value = 0; // the left limit is 1 here, so this is a plain drop

    return PiecewiseFn::fromBreakpoints(std::move(bps));
}

PiecewiseFn genNormalConvex(const GeneratorConfig& cfg) {
    Rng rng(cfg.seed);
    return drawNormalConvex(rng, cfg);
}

PiecewiseFn drawRough(Rng& rng, const GeneratorConfig& cfg) {
    std::vector<Rational> xs;
    unsigned interior = static_cast<unsigned>(rng.below(
        cfg.maxBreakpoints >= 2 ? cfg.maxBreakpoints - 1 : 1));
    for (unsigned i = 0; i < interior; ++i) {
        Rational t = rng.grade(cfg.denominatorBound, false);
        if (t != 0)
            xs.push_back(t);
    }
    xs.emplace_back(0);
    xs.emplace_back(1);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Breakpoint> bps;
    for (const Rational& x : xs) {
        Breakpoint bp;
        bp.x = x;
        bp.value = rng.grade(cfg.denominatorBound, true);
        if (x != 0)
            bp.left = rng.grade(cfg.denominatorBound, true);
        if (x != 1)
            bp.right = rng.grade(cfg.denominatorBound, true);
        bps.push_back(std::move(bp));
    }
    return PiecewiseFn::fromBreakpoints(std::move(bps));
}

std::vector<Rational> breakpointAlignedGrid(const PiecewiseFn& f,
                                            const PiecewiseFn& g,
                                            unsigned resolution) {
    if (resolution == 0)
        throw PreconditionError("grid resolution must be positive");
    std::vector<Rational> grid;
    for (unsigned k = 0; k <= resolution; ++k)
        grid.emplace_back(k, resolution);
    for (const Breakpoint& b : f.breakpoints())
        grid.push_back(b.x);
    for (const Breakpoint& b : g.breakpoints())
        grid.push_back(b.x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

SampledFn oracleConvolution(const ConvolutionSpec& spec, const PiecewiseFn& f,
                            const PiecewiseFn& g,
                            const std::vector<Rational>& grid) {
    const bool minCarrier = spec.carrier.name == "min";
    if (!minCarrier && spec.carrier.name != "max")
        throw PreconditionError("oracleConvolution supports only min or max carriers");
    if (!std::is_sorted(grid.begin(), grid.end()) ||
        std::adjacent_find(grid.begin(), grid.end()) != grid.end())
        throw PreconditionError("oracle grid must be sorted and duplicate-free");
    if (grid.empty() || grid.front() < 0 || grid.back() > 1)
        throw PreconditionError("oracle grid outside [0,1]");
    auto covers = [&](const PiecewiseFn& h) {
        return std::all_of(h.breakpoints().begin(), h.breakpoints().end(),
                           [&](const Breakpoint& b) {
                               return std::binary_search(grid.begin(), grid.end(),
                                                         b.x);
                           });
    };
    if (!covers(f) || !covers(g))
        throw PreconditionError("oracle grid must contain every breakpoint");

    std::vector<Rational> fv, gv;
    fv.reserve(grid.size());
    gv.reserve(grid.size());
    for (const Rational& x : grid) {
        fv.push_back(f.evalAt(x));
        gv.push_back(g.evalAt(x));
    }

    SampledFn out;
    out.exact = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Rational best = spec.combiner.apply(fv[i], gv[i]);
        if (minCarrier) {
            for (std::size_t j = i + 1; j < grid.size(); ++j) {
                best = std::max(best, spec.combiner.apply(fv[i], gv[j]));
                best = std::max(best, spec.combiner.apply(fv[j], gv[i]));
            }
        } else {
            for (std::size_t j = 0; j < i; ++j) {
                best = std::max(best, spec.combiner.apply(fv[i], gv[j]));
                best = std::max(best, spec.combiner.apply(fv[j], gv[i]));
            }
        }
        out.points.emplace_back(grid[i], best);
    }
    return out;
}

} // namespace t2f
