#pragma once

#include "juliahull/hull.h"
#include "juliahull/julia.h"
#include "juliahull/polynomial.h"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace juliahull {

struct CheckConfig {
    std::size_t juliaSamples = 100000;   // n
    std::size_t boundarySamples = 512;   // m
    std::size_t interiorSamples = 256;   // k
    double tolRel = 1e-3;
    std::uint64_t seed = 1;
    double residualTol = 1e-10;
    int gridResolution = 512;
    int maxIter = 256;
    std::size_t cbPairs = 100;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

enum class Verdict { Pass, Fail, Inconclusive };
const char* toString(Verdict v);

struct CheckReport {
    std::string check;
    Verdict verdict = Verdict::Inconclusive;
    /// Largest violation in absolute units; Pass iff <= tolerance.
    double worstViolation = 0.0;
    double tolerance = 0.0; // tolRel * diam(H)
    std::vector<Complex> witnesses;
    std::string polynomial;
    CheckConfig config;
    std::string diagnostic;
};

enum class EqualityKind { StrictInclusion, ChebyshevConjugate, MonomialConjugate };
const char* toString(EqualityKind k);

struct Classification {
    EqualityKind kind = EqualityKind::StrictInclusion;
    /// g with g o p o g^{-1} equal to the normal form; absent for strict inclusion.
    std::optional<AffineMap> conjugation;
    /// +-1 for Chebyshev, the unimodular c for monomials.
    std::optional<Complex> signOrC;
    std::optional<double> coefficientResidual;
    /// Hausdorff distance between H and the sampled set p^-1(H).
    double hausdorffGap = 0.0;
    double gapThreshold = 0.0;
    std::string polynomial;
    CheckConfig config;
    std::string note;
};

/// Raised when the preimage hull matches H but the Julia cloud is neither
/// a segment nor a circle; this contradicts the equality theorems and
/// points at sampling noise.
class EqualityShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Julia sample and its hull, shared by every check on one polynomial.
struct JuliaHull {
    Polynomial p;
    CheckConfig config;
    PointCloud cloud;
    ConvexPolygon hull;

    double diameter() const { return hull.diameter(); }
    double tolerance() const { return config.tolRel * hull.diameter(); }
};

/// Samples J_p and builds its hull. Throws JuliaSamplingError.
JuliaHull buildJuliaHull(const Polynomial& p, const CheckConfig& cfg);

/// Hausdorff distance between H and p^{-1}(H) as sets, measured on the given
/// samples of H. A sample counts as a point of p^{-1}(H) when its image lies
/// within tol of H. Returns H's diameter when no sample qualifies.
double preimageGap(const Polynomial& p, const ConvexPolygon& H, std::span<const Complex> samples, double tol);

/// Boundary, interior and lattice samples of H used by preimageGap.
std::vector<Complex> gapSamples(const ConvexPolygon& H, const CheckConfig& cfg);

/// Iterations over which rounding noise, amplified by at most `expansion`
/// per step, stays below tolRel; forward containment tests never run longer.
int stableHorizon(double expansion, double tolRel, int maxIter);

CheckReport checkBackwardInclusion(const JuliaHull& ctx);
CheckReport checkCriticalInHull(const JuliaHull& ctx);
CheckReport checkFilledInHull(const JuliaHull& ctx);
CheckReport checkCBConvexity(const JuliaHull& ctx);
CheckReport checkThurstonSurjectivity(const JuliaHull& ctx);
Classification classifyEquality(const JuliaHull& ctx);

// Convenience overloads that sample J_p first. Sampling failure turns the
// report Inconclusive; classifyEquality rethrows it.
CheckReport checkBackwardInclusion(const Polynomial& p, const CheckConfig& cfg);
CheckReport checkCriticalInHull(const Polynomial& p, const CheckConfig& cfg);
CheckReport checkFilledInHull(const Polynomial& p, const CheckConfig& cfg);
CheckReport checkCBConvexity(const Polynomial& p, const CheckConfig& cfg);
CheckReport checkThurstonSurjectivity(const Polynomial& p, const CheckConfig& cfg);
Classification classifyEquality(const Polynomial& p, const CheckConfig& cfg);

} // namespace juliahull
