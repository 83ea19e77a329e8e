#include "juliahull/polynomial.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace juliahull {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// a * b for coefficient vectors.
std::vector<Complex> multiply(std::span<const Complex> a, std::span<const Complex> b)
{
    std::vector<Complex> out(a.size() + b.size() - 1, Complex{});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

AffineMap::AffineMap(Complex a_, Complex b_) : a(a_), b(b_)
{
    if (!(std::abs(a) > 0.0) || !finite(a) || !finite(b))
        throw PolynomialError("affine map must have finite coefficients and a != 0");
}

AffineMap AffineMap::inverse() const { return {1.0 / a, -b / a}; }

AffineMap AffineMap::after(const AffineMap& inner) const
{
    return {a * inner.a, a * inner.b + b};
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw PolynomialError("polynomial needs at least one coefficient");
    for (const auto& c : coeffs_)
        if (!finite(c))
            throw PolynomialError("polynomial coefficients must be finite");
    if (std::abs(coeffs_.back()) < 1e-300)
        throw PolynomialError("leading coefficient is zero");
}

Polynomial Polynomial::monomial(Complex c, std::size_t degree)
{
    std::vector<Complex> coeffs(degree + 1, Complex{});
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

double Polynomial::scale() const
{
    double s = 0.0;
    for (const auto& c : coeffs_)
        s = std::max(s, std::abs(c));
    return s;
}

Complex evaluate(const Polynomial& p, Complex z)
{
    auto c = p.coeffs();
    Complex acc = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;)
        acc = acc * z + c[j];
    return acc;
}

ValueAndSlope evaluateWithDerivative(const Polynomial& p, Complex z)
{
    auto c = p.coeffs();
    Complex value = c.back();
    Complex slope{};
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        slope = slope * z + value;
        value = value * z + c[j];
    }
    return {value, slope};
}

double evaluationMagnitude(const Polynomial& p, Complex z)
{
    auto c = p.coeffs();
    const double r = std::abs(z);
    double acc = std::abs(c.back());
    for (std::size_t j = c.size() - 1; j-- > 0;)
        acc = acc * r + std::abs(c[j]);
    return acc;
}

Polynomial derivative(const Polynomial& p)
{
    if (p.degree() < 1)
        throw PolynomialError("derivative of a constant");
    auto c = p.coeffs();
    std::vector<Complex> out(c.size() - 1);
    for (std::size_t j = 1; j < c.size(); ++j)
        out[j - 1] = static_cast<double>(j) * c[j];
    return Polynomial(std::move(out));
}

Polynomial compose(const Polynomial& outer, const Polynomial& inner, std::size_t degreeCap)
{
    const std::size_t degree = outer.degree() * inner.degree();
    if (degree > degreeCap)
        throw PolynomialError("degree cap exceeded");

    // Horner in the polynomial ring.
    auto oc = outer.coeffs();
    std::vector<Complex> acc{oc.back()};
    for (std::size_t j = oc.size() - 1; j-- > 0;) {
        acc = multiply(acc, inner.coeffs());
        acc[0] += oc[j];
    }
    return Polynomial(std::move(acc));
}

Polynomial conjugate(const Polynomial& p, const AffineMap& g)
{
    const AffineMap ginv = g.inverse();
    const Polynomial inner({ginv.b, ginv.a});
    const Polynomial outer({g.b, g.a});
    return compose(outer, compose(p, inner));
}

Polynomial shifted(const Polynomial& p, Complex c)
{
    std::vector<Complex> coeffs(p.coeffs().begin(), p.coeffs().end());
    coeffs[0] += c;
    return Polynomial(std::move(coeffs));
}

Polynomial chebyshev(int degree)
{
    if (degree < 1)
        throw PolynomialError("Chebyshev degree must be >= 1");
    std::vector<Complex> prev{1.0};
    std::vector<Complex> cur{0.0, 1.0};
    for (int n = 1; n < degree; ++n) {
        std::vector<Complex> next(cur.size() + 1, Complex{});
        for (std::size_t j = 0; j < cur.size(); ++j)
            next[j + 1] += 2.0 * cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j)
            next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Polynomial(std::move(cur));
}

double escapeRadius(const Polynomial& p)
{
    if (p.degree() < 1)
        throw PolynomialError("escape radius of a constant");
    auto c = p.coeffs();
    double lower = 0.0;
    for (std::size_t j = 0; j + 1 < c.size(); ++j)
        lower += std::abs(c[j]);
    return std::max(1.0, (2.0 + lower) / std::abs(c.back()));
}

double coefficientDistance(const Polynomial& p, const Polynomial& q)
{
    if (p.degree() != q.degree())
        throw PolynomialError("coefficientDistance: degree mismatch");
    double d = 0.0;
    for (std::size_t j = 0; j <= p.degree(); ++j)
        d = std::max(d, std::abs(p[j] - q[j]));
    return d;
}

namespace {

void appendShortest(std::string& out, double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

} // namespace

std::string coefficientString(const Polynomial& p)
{
    std::string out;
    for (std::size_t j = 0; j <= p.degree(); ++j) {
        if (j > 0)
            out += ',';
        const Complex c = p[j];
        appendShortest(out, c.real());
        const double im = c.imag();
        if (im != 0.0 || std::signbit(im)) {
            if (!std::signbit(im))
                out += '+';
            appendShortest(out, im);
            out += 'i';
        }
    }
    return out;
}

std::string prettyString(const Polynomial& p)
{
    std::ostringstream os;
    os.precision(6);
    bool first = true;
    for (std::size_t j = p.degree() + 1; j-- > 0;) {
        const Complex c = p[j];
        if (c == Complex{})
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (c.imag() == 0.0)
            os << c.real();
        else
            os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
        if (j >= 1)
            os << 'z';
        if (j >= 2)
            os << '^' << j;
    }
    if (first)
        os << '0';
    return os.str();
}

} // namespace juliahull
