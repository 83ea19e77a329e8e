#pragma once

#include "juliahull/polynomial.h"

#include <stdexcept>
#include <vector>

namespace juliahull {

/// All roots of a polynomial, repeated by multiplicity, with |p(root)|.
struct RootSet {
    std::vector<Complex> roots;
    std::vector<double> residuals;

    double maxResidual() const;
};

/// Raised when neither Aberth-Ehrlich nor the Durand-Kerner fallback
/// meets the residual bound. Carries the best iterate seen.
class RootError : public std::runtime_error {
public:
    RootError(const std::string& what, RootSet best, double worstResidual)
        : std::runtime_error(what), best_(std::move(best)), worst_(worstResidual) {}

    const RootSet& best() const { return best_; }
    double worstResidual() const { return worst_; }

private:
    RootSet best_;
    double worst_;
};

class NoRepellingFixedPoint : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultRootIterations = 200;

/**
 * Roots of p by Aberth-Ehrlich simultaneous iteration, falling back to
 * Durand-Kerner when Aberth does not reach the residual bound.
 *
 * Starting points sit on the Cauchy circle |z| = 1 + max |a_j / a_d|,
 * equally spaced and rotated by 0.4 rad. No randomness is involved.
 *
 * A root z is accepted when |p(z)| <= tol * max(scale, sum_j |a_j||z|^j)
 * where scale is the largest coefficient modulus; the second term keeps the
 * bound meaningful for roots far outside the unit disk, where rounding in
 * p(z) alone exceeds tol * scale. Clustered roots are kept as found.
 */
RootSet allRoots(const Polynomial& p, double tol, int maxIterations = kDefaultRootIterations);

/// Roots of p(z) - w.
RootSet preimages(const Polynomial& p, Complex w, double tol);

/// Roots of p'.
RootSet criticalPoints(const Polynomial& p, double tol);

/// Fixed point of p with the largest multiplier |p'(z)|, which must exceed
/// 1 + 1e-9. Throws NoRepellingFixedPoint otherwise.
Complex repellingFixedPoint(const Polynomial& p, double tol);

/// Residual bound used by allRoots for a candidate root z.
double residualBound(const Polynomial& p, Complex z, double tol);

} // namespace juliahull
