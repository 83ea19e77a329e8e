#include "juliahull/report.h"

#include "juliahull/roots.h"

#include <charconv>
#include <cmath>
#include <sstream>

namespace juliahull {

namespace {

nlohmann::json complexJson(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json numberOrNull(double v)
{
    if (!std::isfinite(v))
        return nullptr;
    return v;
}

std::string shortest(double v)
{
    if (!std::isfinite(v))
        return "";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string complexLiteral(Complex z)
{
    std::string s = shortest(z.real());
    if (!std::signbit(z.imag()))
        s += '+';
    return s + shortest(z.imag()) + 'i';
}

std::string csvQuote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

CheckReport runOne(CheckName name, const JuliaHull& ctx)
{
    switch (name) {
    case CheckName::Backward:
        return checkBackwardInclusion(ctx);
    case CheckName::Critical:
        return checkCriticalInHull(ctx);
    case CheckName::Filled:
        return checkFilledInHull(ctx);
    case CheckName::CBConvexity:
        return checkCBConvexity(ctx);
    case CheckName::Thurston:
        return checkThurstonSurjectivity(ctx);
    }
    throw std::logic_error("unknown check");
}

} // namespace

const char* toString(CheckName c)
{
    switch (c) {
    case CheckName::Backward:
        return "checkBackwardInclusion";
    case CheckName::Critical:
        return "checkCriticalInHull";
    case CheckName::Filled:
        return "checkFilledInHull";
    case CheckName::CBConvexity:
        return "checkCBConvexity";
    case CheckName::Thurston:
        return "checkThurstonSurjectivity";
    }
    return "?";
}

CheckName checkNameFromString(std::string_view s)
{
    if (s == "backward")
        return CheckName::Backward;
    if (s == "critical")
        return CheckName::Critical;
    if (s == "filled")
        return CheckName::Filled;
    if (s == "cb")
        return CheckName::CBConvexity;
    if (s == "thurston")
        return CheckName::Thurston;
    throw UsageError("unknown check '" + std::string(s) + "' (expected backward, critical, filled, cb, thurston)");
}

int SuiteResult::exitCode() const
{
    bool inconclusive = classificationRequested && !classification.has_value();
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Fail)
            return kExitFail;
        if (r.verdict == Verdict::Inconclusive)
            inconclusive = true;
    }
    return inconclusive ? kExitInconclusive : kExitPass;
}

SuiteResult runChecks(const PolySpec& spec, const CheckConfig& cfg, std::span<const CheckName> checks, bool classify)
{
    if (spec.poly.degree() < 2)
        throw UsageError("checks need a polynomial of degree >= 2");
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    SuiteResult result;
    result.polynomial = coefficientString(spec.poly);
    result.config = cfg;
    result.classificationRequested = classify;
    std::optional<JuliaHull> ctx;
    try {
        ctx.emplace(buildJuliaHull(spec.poly, cfg));
    } catch (const JuliaSamplingError& e) {
        for (CheckName c : checks) {
            CheckReport r;
            r.check = toString(c);
            r.verdict = Verdict::Inconclusive;
            r.polynomial = coefficientString(spec.poly);
            r.config = cfg;
            r.diagnostic = e.what();
            result.reports.push_back(std::move(r));
        }
        if (classify)
            result.classificationError = e.what();
        return result;
    }

    return runChecks(*ctx, checks, classify);
}

SuiteResult runChecks(const JuliaHull& ctx, std::span<const CheckName> checks, bool classify)
{
    SuiteResult result;
    result.polynomial = coefficientString(ctx.p);
    result.config = ctx.config;
    result.classificationRequested = classify;
    for (CheckName c : checks)
        result.reports.push_back(runOne(c, ctx));
    if (classify) {
        try {
            result.classification = classifyEquality(ctx);
        } catch (const EqualityShapeError& e) {
            result.classificationError = e.what();
        } catch (const RootError& e) {
            result.classificationError = e.what();
        }
    }
    return result;
}

SuiteResult runSuite(const PolySpec& spec, const CheckConfig& cfg)
{
    return runChecks(spec, cfg, kAllChecks, true);
}

nlohmann::json toJson(const CheckConfig& cfg)
{
    return {
        {"n", cfg.juliaSamples},
        {"m", cfg.boundarySamples},
        {"k", cfg.interiorSamples},
        {"tol", cfg.tolRel},
        {"seed", cfg.seed},
        {"residual_tol", cfg.residualTol},
        {"res", cfg.gridResolution},
        {"max_iter", cfg.maxIter},
        {"cb_pairs", cfg.cbPairs},
    };
}

nlohmann::json toJson(const CheckReport& report)
{
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : report.witnesses)
        witnesses.push_back(complexJson(w));
    return {
        {"check", report.check},
        {"verdict", toString(report.verdict)},
        {"worst_violation",
         report.verdict == Verdict::Inconclusive ? nlohmann::json(nullptr) : numberOrNull(report.worstViolation)},
        {"witnesses", witnesses},
        {"config", toJson(report.config)},
        {"polynomial", report.polynomial},
    };
}

nlohmann::json toJson(const Classification& c)
{
    nlohmann::json j = {
        {"check", "classifyEquality"},
        {"verdict", toString(Verdict::Pass)},
        {"worst_violation", numberOrNull(c.hausdorffGap)},
        {"witnesses", nlohmann::json::array()},
        {"config", toJson(c.config)},
        {"polynomial", c.polynomial},
        {"kind", toString(c.kind)},
        {"conjugation_a", nullptr},
        {"conjugation_b", nullptr},
        {"sign_or_c", nullptr},
        {"coefficient_residual", nullptr},
    };
    if (c.conjugation) {
        j["conjugation_a"] = complexJson(c.conjugation->a);
        j["conjugation_b"] = complexJson(c.conjugation->b);
    }
    if (c.signOrC)
        j["sign_or_c"] = complexJson(*c.signOrC);
    if (c.coefficientResidual)
        j["coefficient_residual"] = numberOrNull(*c.coefficientResidual);
    return j;
}

namespace {

nlohmann::json failedClassificationJson(const SuiteResult& result)
{
    const CheckConfig& cfg = result.config;
    const std::string& poly = result.polynomial;
    return {
        {"check", "classifyEquality"},
        {"verdict", toString(Verdict::Inconclusive)},
        {"worst_violation", nullptr},
        {"witnesses", nlohmann::json::array()},
        {"config", toJson(cfg)},
        {"polynomial", poly},
        {"kind", nullptr},
        {"conjugation_a", nullptr},
        {"conjugation_b", nullptr},
        {"sign_or_c", nullptr},
        {"coefficient_residual", nullptr},
    };
}

} // namespace

std::string suiteJson(const SuiteResult& result)
{
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : result.reports)
        doc.push_back(toJson(r));
    if (result.classification)
        doc.push_back(toJson(*result.classification));
    else if (result.classificationRequested)
        doc.push_back(failedClassificationJson(result));
    return doc.dump(2) + "\n";
}

std::string suiteCsv(const SuiteResult& result)
{
    std::ostringstream os;
    os << "check,verdict,worst_violation,witnesses,kind,sign_or_c,coefficient_residual,polynomial\n";
    for (const auto& r : result.reports) {
        os << r.check << ',' << toString(r.verdict) << ','
           << (r.verdict == Verdict::Inconclusive ? "" : shortest(r.worstViolation)) << ',' << r.witnesses.size()
           << ",,,," << csvQuote(r.polynomial) << '\n';
    }
    if (result.classification) {
        const auto& c = *result.classification;
        os << "classifyEquality," << toString(Verdict::Pass) << ',' << shortest(c.hausdorffGap) << ",0,"
           << toString(c.kind) << ',' << (c.signOrC ? complexLiteral(*c.signOrC) : "") << ','
           << (c.coefficientResidual ? shortest(*c.coefficientResidual) : "") << ',' << csvQuote(c.polynomial)
           << '\n';
    } else if (result.classificationRequested) {
        os << "classifyEquality," << toString(Verdict::Inconclusive) << ",,0,,,," << csvQuote(result.polynomial)
           << '\n';
    }
    return os.str();
}

} // namespace juliahull
