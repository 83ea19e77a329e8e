// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "juliahull/checks.h"
#include "juliahull/report.h"
#include "juliahull/roots.h"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <sys/wait.h>

using namespace juliahull;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds(Clock::time_point since)
{
    return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

class Coefficients {
public:
    explicit Coefficients(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    // Coefficients with real and imaginary parts in [0, 1].
    Polynomial unitSquare(int degree)
    {
        for (;;) {
            std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
            for (auto& z : c)
                z = Complex(uniform(0.0, 1.0), uniform(0.0, 1.0));
            if (std::abs(c.back()) > 1e-3)
                return Polynomial(std::move(c));
        }
    }

private:
    std::mt19937_64 gen_;
};

std::string runCli(const std::string& args, int& status)
{
    const std::string cmd = std::string(JULIAHULL_CLI) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int raw = pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
}

Outcome backwardFuzz()
{
    const auto start = Clock::now();
    Coefficients rng(2024);
    CheckConfig cfg;
    int bad = 0;
    double worstRatio = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Polynomial p = rng.unitSquare(rng.integer(2, 6));
        const auto r = checkBackwardInclusion(p, cfg);
        const double ratio = r.worstViolation / (r.tolerance / cfg.tolRel);
        worstRatio = std::max(worstRatio, ratio);
        if (r.verdict != Verdict::Pass || !(ratio <= 1e-3)) {
            ++bad;
            std::fprintf(stderr, "  backward fuzz: %s gave %s (violation %.3g diam)\n", coefficientString(p).c_str(),
                         toString(r.verdict), ratio);
        }
    }
    const double secs = seconds(start);
    return {bad == 0 && secs <= 300.0, std::to_string(bad) + " of 100 failed, worst " + fmt("%.3g", worstRatio) +
                                           " diam, " + fmt("%.1f", secs) + " s (budget 300 s)"};
}

Outcome equalityCases()
{
    const auto start = Clock::now();
    struct Case {
        std::string text;
        EqualityKind kind;
    };
    const std::vector<Case> cases = {
        {"cheb:2", EqualityKind::ChebyshevConjugate},
        {"cheb:3", EqualityKind::ChebyshevConjugate},
        {"cheb:4", EqualityKind::ChebyshevConjugate},
        {"cheb:5", EqualityKind::ChebyshevConjugate},
        {"cheb:6", EqualityKind::ChebyshevConjugate},
        {"negcheb:3", EqualityKind::ChebyshevConjugate},
        {"monomial:1,2", EqualityKind::MonomialConjugate},
        {"monomial:1,3", EqualityKind::MonomialConjugate},
        {"monomial:0+1i,2", EqualityKind::MonomialConjugate},
        {"monomial:0+1i,3", EqualityKind::MonomialConjugate},
        {"monomial:0.6-0.8i,2", EqualityKind::MonomialConjugate},
        {"monomial:0.6-0.8i,3", EqualityKind::MonomialConjugate},
    };
    CheckConfig cfg;
    int bad = 0;
    auto judge = [&](const Polynomial& p, EqualityKind want, const std::string& label) {
        try {
            const auto c = classifyEquality(p, cfg);
            const bool residualOk = c.coefficientResidual && *c.coefficientResidual <= 1e-6 * p.scale();
            if (c.kind != want || !residualOk) {
                ++bad;
                std::fprintf(stderr, "  equality: %s gave %s\n", label.c_str(), toString(c.kind));
            }
        } catch (const std::exception& e) {
            ++bad;
            std::fprintf(stderr, "  equality: %s threw %s\n", label.c_str(), e.what());
        }
    };
    for (const auto& c : cases)
        judge(parsePolynomial(c.text).poly, c.kind, c.text);

    Coefficients rng(77);
    for (int t = 0; t < 10; ++t) {
        const auto& c = cases[static_cast<std::size_t>(rng.integer(0, static_cast<int>(cases.size()) - 1))];
        const AffineMap g(std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * M_PI)),
                          Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)));
        judge(conjugate(parsePolynomial(c.text).poly, g), c.kind, c.text + " conjugated");
    }
    const double secs = seconds(start);
    return {bad == 0 && secs <= 120.0,
            std::to_string(bad) + " of 22 wrong, " + fmt("%.1f", secs) + " s (budget 120 s)"};
}

Outcome strictCases()
{
    CheckConfig cfg;
    int bad = 0;
    double weakest = INFINITY;
    for (const char* text : {"-1,0,1", "0+1i,0,1", "0.25,0,1"}) {
        const auto c = classifyEquality(parsePolynomial(text).poly, cfg);
        const double ratio = c.hausdorffGap / c.gapThreshold;
        weakest = std::min(weakest, ratio);
        if (c.kind != EqualityKind::StrictInclusion || !(ratio >= 10.0)) {
            ++bad;
            std::fprintf(stderr, "  strict: %s gave %s, gap %.3g x threshold\n", text, toString(c.kind), ratio);
        }
    }
    return {bad == 0, std::to_string(bad) + " of 3 wrong, smallest gap " + fmt("%.1f", weakest) + "x threshold"};
}

Outcome gaussLucas()
{
    const auto start = Clock::now();
    Coefficients rng(4242);
    int bad = 0;
    double worst = -INFINITY;
    for (int t = 0; t < 200; ++t) {
        const Polynomial p = rng.unitSquare(rng.integer(3, 8));
        const auto hull = convexHull(allRoots(p, 1e-12).roots);
        for (const auto& c : criticalPoints(p, 1e-12).roots) {
            const double d = signedDistance(hull, c);
            worst = std::max(worst, d);
            if (d > 1e-8)
                ++bad;
        }
    }
    const double secs = seconds(start);
    return {bad == 0 && secs <= 10.0, std::to_string(bad) + " critical points outside, max signed distance " +
                                          fmt("%.2g", worst) + ", " + fmt("%.2f", secs) + " s (budget 10 s)"};
}

Outcome convergence()
{
    const Polynomial p({-1.0, 0.0, 1.0});
    const auto coarse = convexHull(sampleJulia(p, 10000, 1));
    const auto fine = convexHull(sampleJulia(p, 1000000, 1));
    const double ratio = hullHausdorff(coarse, fine) / fine.diameter();
    return {ratio <= 5e-3, "Hausdorff " + fmt("%.3g", ratio) + " diam (limit 5e-3)"};
}

Outcome gridOracle()
{
    int bad = 0;
    std::string detail;
    for (const char* text : {"0,0,1", "-1,0,2", "-1,0,1"}) {
        const Polynomial p = parsePolynomial(text).poly;
        const auto sample = convexHull(sampleJulia(p, 100000, 1));
        const auto grid = convexHull(gridBoundaryCloud(p, 2048, 256));
        const double ratio = hullHausdorff(sample, grid) / sample.diameter();
        if (!(ratio <= 5e-3))
            ++bad;
        detail += std::string(detail.empty() ? "" : ", ") + text + " " + fmt("%.3g", ratio);
    }
    return {bad == 0, "Hausdorff/diam: " + detail + " (limit 5e-3)"};
}

Outcome cbConvexity()
{
    CheckConfig cfg;
    cfg.cbPairs = 100;
    int bad = 0, total = 0;
    for (const char* text : {"cheb:2", "cheb:3", "negcheb:3", "monomial:1,2", "monomial:0+1i,3", "quad:-1+0i",
                             "quad:0+1i", "quad:0.25+0i", "quad:0.25+0.65i", "quad:-0.12+0.75i"}) {
        const auto r = checkCBConvexity(parsePolynomial(text).poly, cfg);
        ++total;
        if (r.verdict != Verdict::Pass || !r.witnesses.empty()) {
            ++bad;
            std::fprintf(stderr, "  cb: %s gave %s with %zu witnesses\n", text, toString(r.verdict),
                         r.witnesses.size());
        }
    }
    return {bad == 0, std::to_string(bad) + " of " + std::to_string(total) + " presets with violations"};
}

Outcome determinism()
{
    int status = 0;
    const std::string args = "suite --poly quad:0.25+0.65i --seed 11";
    const std::string first = runCli(args, status);
    bool same = status == kExitPass && !first.empty();
    for (int k = 1; k < 5 && same; ++k) {
        int s = 0;
        same = runCli(args, s) == first && s == status;
    }
    return {same, same ? "5 runs byte-identical" : "outputs differ or the suite did not pass"};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"backward inclusion fuzz", backwardFuzz},
        {"equality cases", equalityCases},
        {"strict cases", strictCases},
        {"Gauss-Lucas", gaussLucas},
        {"hull convergence", convergence},
        {"escape grid oracle", gridOracle},
        {"C_B convexity", cbConvexity},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        if (!o.pass)
            ++failed;
        std::printf("criterion %zu %-24s %s  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
