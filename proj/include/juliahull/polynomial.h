#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace juliahull {

using Complex = std::complex<double>;

/// Compositions whose degree would exceed this are rejected.
inline constexpr std::size_t kDefaultDegreeCap = 4096;

class PolynomialError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Affine map z -> a*z + b with a != 0.
struct AffineMap {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};

    AffineMap() = default;
    AffineMap(Complex a_, Complex b_);

    static AffineMap identity() { return {}; }

    Complex operator()(Complex z) const { return a * z + b; }
    AffineMap inverse() const;
    /// (*this) o inner
    AffineMap after(const AffineMap& inner) const;
};

/**
 * Complex polynomial with coefficients stored in ascending powers:
 * coeffs()[j] multiplies z^j. The leading coefficient is nonzero and the
 * degree is at least one. There is no trimming of small leading terms;
 * callers pass the degree they mean.
 */
class Polynomial {
public:
    explicit Polynomial(std::vector<Complex> coeffs);

    static Polynomial monomial(Complex c, std::size_t degree);

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    Complex operator[](std::size_t j) const { return coeffs_[j]; }
    Complex leading() const { return coeffs_.back(); }

    /// Largest coefficient modulus.
    double scale() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Complex> coeffs_;
};

/// Horner evaluation.
Complex evaluate(const Polynomial& p, Complex z);

/// Value and first derivative in one Horner pass.
struct ValueAndSlope {
    Complex value;
    Complex slope;
};
ValueAndSlope evaluateWithDerivative(const Polynomial& p, Complex z);

/// Sum of |a_j| |z|^j; bounds the rounding error of evaluate() up to a
/// small multiple of machine epsilon.
double evaluationMagnitude(const Polynomial& p, Complex z);

Polynomial derivative(const Polynomial& p);

/// outer(inner(z)).
Polynomial compose(const Polynomial& outer, const Polynomial& inner,
                   std::size_t degreeCap = kDefaultDegreeCap);

/// g o p o g^{-1}, expanded.
Polynomial conjugate(const Polynomial& p, const AffineMap& g);

/// p + c (adds to the constant term).
Polynomial shifted(const Polynomial& p, Complex c);

/// Chebyshev polynomial of the first kind, T_d(cos t) = cos(d t). d >= 1.
Polynomial chebyshev(int degree);

/// R = max(1, (2 + sum_{j<d} |a_j|) / |a_d|). For |z| >= R, |p(z)| >= 2|z|.
double escapeRadius(const Polynomial& p);

/// Largest |p_j - q_j| over coefficients; degrees must agree.
double coefficientDistance(const Polynomial& p, const Polynomial& q);

/// Comma-separated ascending coefficients, each written "re" or "re+imi"
/// with shortest round-trip decimals: "-1,0,2" for 2z^2 - 1.
std::string coefficientString(const Polynomial& p);

/// Human readable form such as "2z^2 - 1" (not meant to be re-parsed).
std::string prettyString(const Polynomial& p);

} // namespace juliahull
