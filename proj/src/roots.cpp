#include "juliahull/roots.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace juliahull {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kStartAngle = 0.4;

std::vector<Complex> initialGuesses(const Polynomial& p)
{
    const std::size_t d = p.degree();
    const double lead = std::abs(p.leading());
    double ratio = 0.0;
    for (std::size_t j = 0; j < d; ++j)
        ratio = std::max(ratio, std::abs(p[j]) / lead);
    const double radius = 1.0 + ratio;

    std::vector<Complex> z(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + kStartAngle;
        z[k] = std::polar(radius, theta);
    }
    return z;
}

// Rounding floor of |p(z)|: below this the iterate cannot be improved.
bool atRoundingFloor(const Polynomial& p, Complex z, Complex value)
{
    return std::abs(value) <= 8.0 * kEps * evaluationMagnitude(p, z);
}

RootSet finish(const Polynomial& p, std::vector<Complex> z)
{
    RootSet out;
    out.residuals.reserve(z.size());
    for (const auto& r : z)
        out.residuals.push_back(std::abs(evaluate(p, r)));
    out.roots = std::move(z);
    return out;
}

// Largest residual / bound ratio; <= 1 means accepted.
double worstRatio(const Polynomial& p, const RootSet& rs, double tol)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        worst = std::max(worst, rs.residuals[i] / residualBound(p, rs.roots[i], tol));
    return worst;
}

void aberth(const Polynomial& p, std::vector<Complex>& z, int maxIterations)
{
    const std::size_t d = z.size();
    std::vector<char> done(d, 0);
    std::size_t remaining = d;
    for (int it = 0; it < maxIterations && remaining > 0; ++it) {
        for (std::size_t i = 0; i < d; ++i) {
            if (done[i])
                continue;
            const auto [value, slope] = evaluateWithDerivative(p, z[i]);
            if (atRoundingFloor(p, z[i], value)) {
                done[i] = 1;
                --remaining;
                continue;
            }
            Complex sum{};
            Complex product = p.leading();
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i)
                    continue;
                Complex diff = z[i] - z[j];
                if (diff == Complex{})
                    diff = Complex{kEps * (1.0 + std::abs(z[i])), 0.0};
                sum += 1.0 / diff;
                product *= diff;
            }
            Complex step;
            if (slope == Complex{}) {
                // Newton ratio undefined: take a Weierstrass step instead.
                step = value / product;
            } else {
                const Complex ratio = value / slope;
                step = ratio / (1.0 - ratio * sum);
            }
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
                continue;
            z[i] -= step;
            if (std::abs(step) <= 2.0 * kEps * std::abs(z[i])) {
                done[i] = 1;
                --remaining;
            }
        }
    }
}

void durandKerner(const Polynomial& p, std::vector<Complex>& z, int maxIterations)
{
    const std::size_t d = z.size();
    const Complex lead = p.leading();
    for (int it = 0; it < maxIterations; ++it) {
        double largest = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            Complex denom = lead;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i)
                    denom *= z[i] - z[j];
            if (denom == Complex{})
                continue;
            const Complex step = evaluate(p, z[i]) / denom;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
                continue;
            z[i] -= step;
            largest = std::max(largest, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (largest <= 2.0 * kEps)
            break;
    }
}

} // namespace

double RootSet::maxResidual() const
{
    double m = 0.0;
    for (double r : residuals)
        m = std::max(m, r);
    return m;
}

double residualBound(const Polynomial& p, Complex z, double tol)
{
    return tol * std::max(p.scale(), evaluationMagnitude(p, z));
}

RootSet allRoots(const Polynomial& p, double tol, int maxIterations)
{
    if (p.degree() < 1)
        throw PolynomialError("allRoots: constant polynomial has no roots");
    if (!(tol > 0.0))
        throw std::invalid_argument("allRoots: tol must be positive");

    if (p.degree() == 1)
        return finish(p, {-p[0] / p[1]});

    std::vector<Complex> z = initialGuesses(p);
    aberth(p, z, maxIterations);
    RootSet result = finish(p, z);
    const double aberthWorst = worstRatio(p, result, tol);
    if (aberthWorst <= 1.0)
        return result;

    durandKerner(p, z, maxIterations);
    RootSet fallback = finish(p, std::move(z));
    const double fallbackWorst = worstRatio(p, fallback, tol);
    if (fallbackWorst <= 1.0)
        return fallback;

    const bool aberthBetter = aberthWorst <= fallbackWorst;
    RootSet best = aberthBetter ? std::move(result) : std::move(fallback);
    const double worst = best.maxResidual();
    throw RootError("root finder did not converge", std::move(best), worst);
}

RootSet preimages(const Polynomial& p, Complex w, double tol)
{
    return allRoots(shifted(p, -w), tol);
}

RootSet criticalPoints(const Polynomial& p, double tol)
{
    if (p.degree() < 2)
        throw PolynomialError("criticalPoints: degree must be >= 2");
    return allRoots(derivative(p), tol);
}

Complex repellingFixedPoint(const Polynomial& p, double tol)
{
    if (p.degree() < 2)
        throw PolynomialError("repellingFixedPoint: degree must be >= 2");
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
    c[1] -= 1.0;
    const RootSet fixed = allRoots(Polynomial(std::move(c)), tol);

    const Polynomial slope = derivative(p);
    double best = -1.0;
    Complex chosen{};
    for (const auto& z : fixed.roots) {
        const double m = std::abs(evaluate(slope, z));
        if (m > best) {
            best = m;
            chosen = z;
        }
    }
    if (!(best > 1.0 + 1e-9))
        throw NoRepellingFixedPoint("no strictly repelling fixed point found");
    return chosen;
}

} // namespace juliahull
