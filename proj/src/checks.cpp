#include "juliahull/checks.h"

#include "juliahull/parallel.h"
#include "juliahull/roots.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace juliahull {

namespace {

constexpr std::size_t kMaxWitnesses = 10;
constexpr int kThurstonHalfPlanes = 20;
constexpr int kThurstonTargets = 50;
constexpr std::size_t kMinCBPairs = 10;

// Independent random streams per check.
constexpr std::uint64_t kInteriorStream = 0x494e54;
constexpr std::uint64_t kGapStream = 0x474150;
constexpr int kGapLattice = 128;
constexpr std::uint64_t kCBStream = 0x4342;
constexpr std::uint64_t kThurstonStream = 0x544855;

struct Offender {
    double violation;
    Complex point;
};

CheckReport makeReport(const JuliaHull& ctx, std::string name)
{
    CheckReport r;
    r.check = std::move(name);
    r.polynomial = coefficientString(ctx.p);
    r.config = ctx.config;
    r.tolerance = ctx.tolerance();
    return r;
}

// Sets verdict and keeps the worst offenders (ties by sample order).
void conclude(CheckReport& r, std::vector<Offender> offenders)
{
    r.verdict = r.worstViolation <= r.tolerance ? Verdict::Pass : Verdict::Fail;
    std::erase_if(offenders, [&](const Offender& o) { return !(o.violation > r.tolerance); });
    std::stable_sort(offenders.begin(), offenders.end(),
                     [](const Offender& a, const Offender& b) { return a.violation > b.violation; });
    if (offenders.size() > kMaxWitnesses)
        offenders.resize(kMaxWitnesses);
    for (const auto& o : offenders)
        r.witnesses.push_back(o.point);
}

CheckReport inconclusive(const JuliaHull& ctx, std::string name, std::string why)
{
    CheckReport r = makeReport(ctx, std::move(name));
    r.verdict = Verdict::Inconclusive;
    r.diagnostic = std::move(why);
    return r;
}

// For every target, the largest signed distance of its preimages to H.
struct PreimageScan {
    std::vector<double> worst;
    std::vector<Complex> worstPoint;
};

PreimageScan scanPreimages(const Polynomial& p, const ConvexPolygon& H, std::span<const Complex> targets, double rootTol)
{
    PreimageScan scan;
    scan.worst.assign(targets.size(), -std::numeric_limits<double>::infinity());
    scan.worstPoint.assign(targets.size(), Complex{});
    parallelFor(targets.size(), [&](std::size_t i) {
        const RootSet pre = preimages(p, targets[i], rootTol);
        for (const auto& z : pre.roots) {
            const double sd = signedDistance(H, z);
            if (sd > scan.worst[i]) {
                scan.worst[i] = sd;
                scan.worstPoint[i] = z;
            }
        }
    });
    return scan;
}

std::vector<Complex> dirichletCombination(std::span<const Complex> points, std::size_t count, CounterRng& rng)
{
    std::vector<Complex> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        Complex acc{};
        double total = 0.0;
        for (const auto& v : points) {
            const double w = -std::log(1.0 - rng.uniform());
            acc += w * v;
            total += w;
        }
        out.push_back(total > 0.0 ? acc / total : points.front());
    }
    return out;
}

} // namespace

void CheckConfig::validate() const
{
    if (juliaSamples < 1000)
        throw std::invalid_argument("n must be >= 1000");
    if (boundarySamples < 16 || interiorSamples < 16)
        throw std::invalid_argument("m and k must be >= 16");
    if (!(tolRel > 0.0 && tolRel < 0.05))
        throw std::invalid_argument("tol must lie in (0, 0.05)");
    if (!(residualTol > 0.0))
        throw std::invalid_argument("residual tolerance must be positive");
    if (gridResolution < 64)
        throw std::invalid_argument("res must be >= 64");
    if (maxIter < 50)
        throw std::invalid_argument("max-iter must be >= 50");
    if (cbPairs < kMinCBPairs)
        throw std::invalid_argument("at least 10 C_B pairs are required");
}

const char* toString(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return "Pass";
    case Verdict::Fail:
        return "Fail";
    case Verdict::Inconclusive:
        return "Inconclusive";
    }
    return "?";
}

const char* toString(EqualityKind k)
{
    switch (k) {
    case EqualityKind::StrictInclusion:
        return "StrictInclusion";
    case EqualityKind::ChebyshevConjugate:
        return "ChebyshevConjugate";
    case EqualityKind::MonomialConjugate:
        return "MonomialConjugate";
    }
    return "?";
}

JuliaHull buildJuliaHull(const Polynomial& p, const CheckConfig& cfg)
{
    cfg.validate();
    if (p.degree() < 2)
        throw PolynomialError("theorem checks need degree >= 2");
    InverseIterationOptions opts;
    opts.rootTol = cfg.residualTol;
    PointCloud cloud = sampleJulia(p, cfg.juliaSamples, cfg.seed, opts);
    ConvexPolygon hull = convexHull(cloud);
    return JuliaHull{p, cfg, std::move(cloud), std::move(hull)};
}

double preimageGap(const Polynomial& p, const ConvexPolygon& H, std::span<const Complex> samples, double tol)
{
    std::vector<char> inside(samples.size());
    parallelFor(samples.size(),
                [&](std::size_t i) { inside[i] = signedDistance(H, evaluate(p, samples[i])) <= tol; });
    std::vector<Complex> members;
    for (std::size_t i = 0; i < samples.size(); ++i)
        if (inside[i])
            members.push_back(samples[i]);
    if (members.empty())
        return H.diameter();
    // members is a subset of samples, so this is the one-sided distance.
    return hausdorff(samples, members);
}

std::vector<Complex> gapSamples(const ConvexPolygon& H, const CheckConfig& cfg)
{
    std::vector<Complex> out = boundarySamples(H, cfg.boundarySamples);
    CounterRng rng(cfg.seed, kGapStream);
    const auto interior = interiorSamples(H, cfg.interiorSamples, rng);
    out.insert(out.end(), interior.begin(), interior.end());

    double minRe = H.vertices()[0].real(), maxRe = minRe, minIm = H.vertices()[0].imag(), maxIm = minIm;
    for (const auto& v : H.vertices()) {
        minRe = std::min(minRe, v.real());
        maxRe = std::max(maxRe, v.real());
        minIm = std::min(minIm, v.imag());
        maxIm = std::max(maxIm, v.imag());
    }
    const double step = std::max(maxRe - minRe, maxIm - minIm) / kGapLattice;
    if (step <= 0.0)
        return out;
    for (double y = minIm + 0.5 * step; y < maxIm; y += step)
        for (double x = minRe + 0.5 * step; x < maxRe; x += step)
            if (H.containsFast({x, y}))
                out.emplace_back(x, y);
    return out;
}

int stableHorizon(double expansion, double tolRel, int maxIter)
{
    const double growth = std::log(std::max(expansion, 2.0));
    const double budget = std::log(tolRel / std::numeric_limits<double>::epsilon());
    return std::clamp(static_cast<int>(budget / growth), 1, maxIter);
}

CheckReport checkBackwardInclusion(const JuliaHull& ctx)
{
    const char* name = "checkBackwardInclusion";
    const auto& cfg = ctx.config;
    std::vector<Complex> targets = boundarySamples(ctx.hull, cfg.boundarySamples);
    CounterRng rng(cfg.seed, kInteriorStream);
    const auto inner = interiorSamples(ctx.hull, cfg.interiorSamples, rng);
    targets.insert(targets.end(), inner.begin(), inner.end());

    PreimageScan scan;
    try {
        scan = scanPreimages(ctx.p, ctx.hull, targets, cfg.residualTol);
    } catch (const RootError& e) {
        return inconclusive(ctx, name, e.what());
    }

    CheckReport r = makeReport(ctx, name);
    std::vector<Offender> offenders;
    r.worstViolation = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < targets.size(); ++i) {
        r.worstViolation = std::max(r.worstViolation, scan.worst[i]);
        offenders.push_back({scan.worst[i], scan.worstPoint[i]});
    }
    conclude(r, std::move(offenders));
    return r;
}

CheckReport checkCriticalInHull(const JuliaHull& ctx)
{
    const char* name = "checkCriticalInHull";
    RootSet crit;
    try {
        crit = criticalPoints(ctx.p, ctx.config.residualTol);
    } catch (const RootError& e) {
        return inconclusive(ctx, name, e.what());
    }
    CheckReport r = makeReport(ctx, name);
    std::vector<Offender> offenders;
    r.worstViolation = -std::numeric_limits<double>::infinity();
    for (const auto& c : crit.roots) {
        const double sd = signedDistance(ctx.hull, c);
        r.worstViolation = std::max(r.worstViolation, sd);
        offenders.push_back({sd, c});
    }
    conclude(r, std::move(offenders));
    return r;
}

CheckReport checkFilledInHull(const JuliaHull& ctx)
{
    const auto& cfg = ctx.config;
    const EscapeGrid grid = escapeGrid(ctx.p, cfg.gridResolution, cfg.maxIter);
    const double slack = grid.cellDiagonal();

    CheckReport r = makeReport(ctx, "checkFilledInHull");
    std::vector<double> rowWorst(static_cast<std::size_t>(grid.height), 0.0);
    std::vector<Complex> rowPoint(static_cast<std::size_t>(grid.height));
    parallelFor(rowWorst.size(), [&](std::size_t row) {
        const int y = static_cast<int>(row);
        for (int x = 0; x < grid.width; ++x) {
            if (!grid.at(x, y))
                continue;
            const Complex c = grid.center(x, y);
            const double v = std::max(0.0, outsideDistance(ctx.hull, c) - slack);
            if (v > rowWorst[row]) {
                rowWorst[row] = v;
                rowPoint[row] = c;
            }
        }
    });
    std::vector<Offender> offenders;
    r.worstViolation = 0.0;
    for (std::size_t row = 0; row < rowWorst.size(); ++row) {
        r.worstViolation = std::max(r.worstViolation, rowWorst[row]);
        if (rowWorst[row] > 0.0)
            offenders.push_back({rowWorst[row], rowPoint[row]});
    }
    conclude(r, std::move(offenders));
    return r;
}

CheckReport checkCBConvexity(const JuliaHull& ctx)
{
    const char* name = "checkCBConvexity";
    const auto& cfg = ctx.config;
    const double tol = ctx.tolerance();
    const auto verts = ctx.hull.vertices();

    Complex lo = verts[0], hi = verts[0];
    for (const auto& v : verts) {
        lo = {std::min(lo.real(), v.real()), std::min(lo.imag(), v.imag())};
        hi = {std::max(hi.real(), v.real()), std::max(hi.imag(), v.imag())};
    }
    const Complex mid = 0.5 * (lo + hi);
    const double half = 0.75 * std::max({hi.real() - lo.real(), hi.imag() - lo.imag(), tol});

    // Candidates alternate between points of H and points of an enlarged
    // bounding box; the admissible ones are paired in order.
    CounterRng rng(cfg.seed, kCBStream);
    const std::size_t wanted = 2 * cfg.cbPairs;
    const std::size_t maxCandidates = 40 * wanted;
    std::vector<Complex> admissible;
    try {
        std::size_t drawn = 0;
        while (admissible.size() < wanted && drawn < maxCandidates) {
            const std::size_t batch = std::min<std::size_t>(wanted, maxCandidates - drawn);
            std::vector<Complex> cands(batch);
            for (std::size_t i = 0; i < batch; ++i, ++drawn) {
                if (drawn % 2 == 0) {
                    cands[i] = interiorSamples(ctx.hull, 1, rng).front();
                } else {
                    const double x = 2.0 * rng.uniform() - 1.0;
                    const double y = 2.0 * rng.uniform() - 1.0;
                    cands[i] = mid + half * Complex{x, y};
                }
            }
            const PreimageScan scan = scanPreimages(ctx.p, ctx.hull, cands, cfg.residualTol);
            for (std::size_t i = 0; i < batch && admissible.size() < wanted; ++i)
                if (scan.worst[i] <= tol)
                    admissible.push_back(cands[i]);
        }
    } catch (const RootError& e) {
        return inconclusive(ctx, name, e.what());
    }

    const std::size_t pairs = admissible.size() / 2;
    if (pairs < kMinCBPairs)
        return inconclusive(ctx, name, "fewer than 10 admissible pairs found");

    std::vector<Complex> combos;
    combos.reserve(pairs * 9);
    for (std::size_t k = 0; k < pairs; ++k)
        for (int s = 1; s <= 9; ++s) {
            const double t = 0.1 * s;
            combos.push_back(t * admissible[2 * k] + (1.0 - t) * admissible[2 * k + 1]);
        }

    PreimageScan scan;
    try {
        scan = scanPreimages(ctx.p, ctx.hull, combos, cfg.residualTol);
    } catch (const RootError& e) {
        return inconclusive(ctx, name, e.what());
    }
    CheckReport r = makeReport(ctx, name);
    std::vector<Offender> offenders;
    r.worstViolation = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < combos.size(); ++i) {
        r.worstViolation = std::max(r.worstViolation, scan.worst[i]);
        offenders.push_back({scan.worst[i], combos[i]});
    }
    conclude(r, std::move(offenders));
    return r;
}

CheckReport checkThurstonSurjectivity(const JuliaHull& ctx)
{
    const char* name = "checkThurstonSurjectivity";
    const auto& cfg = ctx.config;
    RootSet crit;
    try {
        crit = criticalPoints(ctx.p, cfg.residualTol);
    } catch (const RootError& e) {
        return inconclusive(ctx, name, e.what());
    }

    CounterRng rng(cfg.seed, kThurstonStream);
    const double reach = 2.0 * escapeRadius(ctx.p);
    struct Probe {
        HalfPlane plane;
        Complex target;
    };
    std::vector<Probe> probes;
    for (int h = 0; h < kThurstonHalfPlanes; ++h) {
        const Complex anchor = dirichletCombination(crit.roots, 1, rng).front();
        const Complex normal = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
        const HalfPlane plane{normal, dot(anchor, normal)};
        for (int t = 0; t < kThurstonTargets; ++t) {
            const double radius = reach * std::sqrt(rng.uniform());
            const double angle = 2.0 * std::numbers::pi * rng.uniform();
            probes.push_back({plane, std::polar(radius, angle)});
        }
    }

    std::vector<double> shortfall(probes.size(), 0.0);
    try {
        parallelFor(probes.size(), [&](std::size_t i) {
            const RootSet pre = preimages(ctx.p, probes[i].target, cfg.residualTol);
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& z : pre.roots)
                best = std::max(best, probes[i].plane.value(z));
            shortfall[i] = std::max(0.0, -best);
        });
    } catch (const RootError& e) {
        return inconclusive(ctx, name, e.what());
    }

    CheckReport r = makeReport(ctx, name);
    std::vector<Offender> offenders;
    r.worstViolation = 0.0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        r.worstViolation = std::max(r.worstViolation, shortfall[i]);
        offenders.push_back({shortfall[i], probes[i].target});
    }
    conclude(r, std::move(offenders));
    return r;
}

namespace {

// -a_{d-1} / (d a_d): centroid of the roots, and of the critical points.
Complex rootCentroid(const Polynomial& p)
{
    const std::size_t d = p.degree();
    return -p[d - 1] / (static_cast<double>(d) * p.leading());
}

// All (n)-th roots of w.
std::vector<Complex> nthRoots(Complex w, std::size_t n)
{
    std::vector<Complex> out;
    const double r = std::pow(std::abs(w), 1.0 / static_cast<double>(n));
    const double base = std::arg(w) / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(std::polar(r, base + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
    return out;
}

struct NormalFormMatch {
    AffineMap g;
    Complex signOrC;
    double residual = std::numeric_limits<double>::infinity();
    double scale = 1.0;
};

// p ~ sigma*T_d via g(z) = a z + b. The centroid fixes b / a and the leading
// coefficient fixes a^{d-1}; the fitted segment picks the branch of a.
NormalFormMatch matchChebyshev(const Polynomial& p, const SegmentShape& seg)
{
    const std::size_t d = p.degree();
    Complex u = seg.first, v = seg.second;
    if (v.real() < u.real() || (v.real() == u.real() && v.imag() < u.imag()))
        std::swap(u, v);
    const Complex fitted = 2.0 / (v - u);
    const Complex center = rootCentroid(p);
    const Polynomial cheb = chebyshev(static_cast<int>(d));

    NormalFormMatch best;
    best.scale = cheb.scale();
    for (double sigma : {1.0, -1.0}) {
        const Complex power = p.leading() / (sigma * std::pow(2.0, static_cast<double>(d - 1)));
        for (Complex orient : {fitted, -fitted}) {
            const auto candidates = nthRoots(power, d - 1);
            Complex a = candidates.front();
            for (const auto& c : candidates)
                if (std::abs(c - orient) < std::abs(a - orient))
                    a = c;
            const AffineMap g(a, -a * center);
            const Polynomial q = conjugate(p, g);
            std::vector<Complex> signedCheb(cheb.coeffs().begin(), cheb.coeffs().end());
            for (auto& c : signedCheb)
                c *= sigma;
            const double residual = coefficientDistance(q, Polynomial(std::move(signedCheb)));
            // Strictly better wins, so +1 and the fitted orientation are
            // preferred on ties.
            if (residual < best.residual * (1.0 - 1e-9) - 1e-300) {
                best.g = g;
                best.signOrC = {sigma, 0.0};
                best.residual = residual;
            }
        }
    }
    return best;
}

// p ~ c z^d via g(z) = (z - z0) / r with z0 the root centroid and
// r = |a_d|^{-1/(d-1)}.
NormalFormMatch matchMonomial(const Polynomial& p)
{
    const std::size_t d = p.degree();
    const Complex z0 = rootCentroid(p);
    const double r = std::pow(std::abs(p.leading()), -1.0 / static_cast<double>(d - 1));
    NormalFormMatch m;
    m.g = AffineMap({1.0 / r, 0.0}, -z0 / r);
    const Polynomial q = conjugate(p, m.g);
    m.signOrC = q.leading();
    double residual = std::abs(std::abs(q.leading()) - 1.0);
    for (std::size_t j = 0; j < d; ++j)
        residual = std::max(residual, std::abs(q[j]));
    m.residual = residual;
    m.scale = 1.0;
    return m;
}

} // namespace

Classification classifyEquality(const JuliaHull& ctx)
{
    const auto& cfg = ctx.config;
    Classification c;
    c.polynomial = coefficientString(ctx.p);
    c.config = cfg;
    c.gapThreshold = ctx.tolerance();

    c.hausdorffGap = preimageGap(ctx.p, ctx.hull, gapSamples(ctx.hull, cfg), c.gapThreshold);
    if (c.hausdorffGap > c.gapThreshold) {
        c.note = "p^-1(H) is strictly smaller than H";
        return c;
    }

    // Equality forces H within K: hull points must not escape. Noise grows
    // at most like max |p'| on H, attained on the boundary.
    const Polynomial dp = derivative(ctx.p);
    double expansion = static_cast<double>(ctx.p.degree());
    for (const auto& z : boundarySamples(ctx.hull, cfg.boundarySamples))
        expansion = std::max(expansion, std::abs(evaluate(dp, z)));
    const int horizon = stableHorizon(expansion, cfg.tolRel, cfg.maxIter);
    const double R = escapeRadius(ctx.p);
    CounterRng rng(cfg.seed, kInteriorStream + 1);
    for (const auto& z0 : interiorSamples(ctx.hull, cfg.interiorSamples, rng)) {
        Complex z = z0;
        for (int k = 0; k < horizon; ++k) {
            z = evaluate(ctx.p, z);
            if (std::abs(z) > R) {
                c.note = "hull point escapes although the preimage hull matches H";
                return c;
            }
        }
    }

    const Shape shape = classifyShape(ctx.cloud, cfg.tolRel);
    const double fitTol = 10.0 * c.gapThreshold;
    if (const auto* seg = std::get_if<SegmentShape>(&shape)) {
        const NormalFormMatch m = matchChebyshev(ctx.p, *seg);
        c.coefficientResidual = m.residual;
        // The recovered segment must agree with the fitted one.
        const Complex lo = m.g.inverse()(-1.0), hi = m.g.inverse()(1.0);
        const double endpointError = std::min(std::max(std::abs(lo - seg->first), std::abs(hi - seg->second)),
                                              std::max(std::abs(lo - seg->second), std::abs(hi - seg->first)));
        if (m.residual <= 1e-6 * m.scale && endpointError <= fitTol) {
            c.kind = EqualityKind::ChebyshevConjugate;
            c.conjugation = m.g;
            c.signOrC = m.signOrC;
        } else {
            c.note = "segment Julia set but no Chebyshev normal form";
        }
        return c;
    }
    if (const auto* circle = std::get_if<CircleShape>(&shape)) {
        const NormalFormMatch m = matchMonomial(ctx.p);
        c.coefficientResidual = m.residual;
        const Complex center = m.g.inverse()(0.0);
        const double radius = 1.0 / std::abs(m.g.a);
        const bool agrees = std::abs(center - circle->center) <= fitTol && std::abs(radius - circle->radius) <= fitTol;
        if (m.residual <= 1e-6 * m.scale && agrees) {
            c.kind = EqualityKind::MonomialConjugate;
            c.conjugation = m.g;
            c.signOrC = m.signOrC;
        } else {
            c.note = "circular Julia set but no monomial normal form";
        }
        return c;
    }
    throw EqualityShapeError("equality without segment/circle shape - increase n");
}

namespace {

template <class Check>
CheckReport withSampledHull(const Polynomial& p, const CheckConfig& cfg, const char* name, Check check)
{
    try {
        return check(buildJuliaHull(p, cfg));
    } catch (const JuliaSamplingError& e) {
        CheckReport r;
        r.check = name;
        r.verdict = Verdict::Inconclusive;
        r.polynomial = coefficientString(p);
        r.config = cfg;
        r.diagnostic = e.what();
        return r;
    }
}

} // namespace

CheckReport checkBackwardInclusion(const Polynomial& p, const CheckConfig& cfg)
{
    return withSampledHull(p, cfg, "checkBackwardInclusion",
                           [](const JuliaHull& ctx) { return checkBackwardInclusion(ctx); });
}
CheckReport checkCriticalInHull(const Polynomial& p, const CheckConfig& cfg)
{
    return withSampledHull(p, cfg, "checkCriticalInHull",
                           [](const JuliaHull& ctx) { return checkCriticalInHull(ctx); });
}
CheckReport checkFilledInHull(const Polynomial& p, const CheckConfig& cfg)
{
    return withSampledHull(p, cfg, "checkFilledInHull", [](const JuliaHull& ctx) { return checkFilledInHull(ctx); });
}
CheckReport checkCBConvexity(const Polynomial& p, const CheckConfig& cfg)
{
    return withSampledHull(p, cfg, "checkCBConvexity", [](const JuliaHull& ctx) { return checkCBConvexity(ctx); });
}
CheckReport checkThurstonSurjectivity(const Polynomial& p, const CheckConfig& cfg)
{
    return withSampledHull(p, cfg, "checkThurstonSurjectivity",
                           [](const JuliaHull& ctx) { return checkThurstonSurjectivity(ctx); });
}
Classification classifyEquality(const Polynomial& p, const CheckConfig& cfg)
{
    return classifyEquality(buildJuliaHull(p, cfg));
}

} // namespace juliahull
