#include "oracles.h"

#include "juliahull/polynomial.h"

#include <doctest.h>

using namespace juliahull;

namespace {

bool sameCoeffs(const Polynomial& p, const std::vector<Complex>& want, double tol = 1e-12)
{
    if (p.degree() + 1 != want.size())
        return false;
    for (std::size_t j = 0; j < want.size(); ++j)
        if (std::abs(p[j] - want[j]) > tol)
            return false;
    return true;
}

} // namespace

TEST_CASE("construction rejects empty, non-finite and vanishing leading coefficients")
{
    CHECK_THROWS_AS(Polynomial({}), PolynomialError);
    CHECK_THROWS_AS(Polynomial({1.0, 0.0}), PolynomialError);
    CHECK_THROWS_AS(Polynomial({1.0, Complex(NAN, 0.0)}), PolynomialError);
    CHECK_THROWS_AS(Polynomial({1.0, 1e-301}), PolynomialError);
    CHECK(Polynomial({0.0, 1e-299}).degree() == 1);
    CHECK_THROWS_AS(AffineMap(0.0, 1.0), PolynomialError);
}

TEST_CASE("evaluate examples")
{
    const Polynomial t2({-1.0, 0.0, 2.0});
    CHECK(evaluate(t2, 0.0) == Complex(-1.0));
    const Complex c{0.3, -0.7};
    CHECK(evaluate(Polynomial({c, 0.0, 1.0}), 0.0) == c);
    CHECK(std::abs(evaluate(chebyshev(3), 1.0) - 1.0) < 1e-15);
}

TEST_CASE("derivative examples")
{
    CHECK(sameCoeffs(derivative(Polynomial({-1.0, 0.0, 2.0})), {0.0, 4.0}));
    CHECK(sameCoeffs(derivative(Polynomial::monomial(1.0, 3)), {0.0, 0.0, 3.0}));
    CHECK(sameCoeffs(derivative(derivative(Polynomial::monomial(1.0, 2))), {2.0}));
    CHECK_THROWS_AS(derivative(Polynomial({5.0})), PolynomialError);
}

TEST_CASE("evaluateWithDerivative agrees with a central difference")
{
    oracle::Random rng(11);
    for (int t = 0; t < 50; ++t) {
        const Polynomial p(rng.coefficients(rng.integer(1, 7)));
        const Complex z = rng.disk(1.5);
        const double h = 1e-6;
        const Complex fd = (oracle::powerSum(oracle::coeffVector(p), z + h) -
                            oracle::powerSum(oracle::coeffVector(p), z - h)) / (2.0 * h);
        const auto vs = evaluateWithDerivative(p, z);
        CHECK(std::abs(vs.slope - fd) <= 1e-6 * (1.0 + std::abs(fd)));
    }
}

TEST_CASE("compose examples")
{
    const Polynomial sq = Polynomial::monomial(1.0, 2);
    CHECK(sameCoeffs(compose(sq, sq), {0.0, 0.0, 0.0, 0.0, 1.0}));
    CHECK(sameCoeffs(compose(Polynomial({-1.0, 0.0, 1.0}), Polynomial({1.0, 1.0})), {0.0, 2.0, 1.0}));
    // T_m o T_n = T_mn, with T_4 from the three-term recurrence written out here.
    std::vector<std::vector<Complex>> t{{1.0}, {0.0, 1.0}};
    for (int k = 2; k <= 4; ++k) {
        std::vector<Complex> next(static_cast<std::size_t>(k) + 1, 0.0);
        for (std::size_t j = 0; j < t[k - 1].size(); ++j)
            next[j + 1] += 2.0 * t[k - 1][j];
        for (std::size_t j = 0; j < t[k - 2].size(); ++j)
            next[j] -= t[k - 2][j];
        t.push_back(next);
    }
    CHECK(sameCoeffs(compose(chebyshev(2), chebyshev(2)), t[4]));
    CHECK_THROWS_AS(compose(Polynomial::monomial(1.0, 100), Polynomial::monomial(1.0, 100), 4096), PolynomialError);
}

TEST_CASE("compose matches nested evaluation on random inputs")
{
    oracle::Random rng(5);
    for (int t = 0; t < 200; ++t) {
        const Polynomial p(rng.coefficients(rng.integer(1, 6)));
        const Polynomial q(rng.coefficients(rng.integer(1, 6)));
        const Complex z = rng.disk(2.0);
        const Complex inner = oracle::powerSum(oracle::coeffVector(q), z);
        const Complex want = oracle::powerSum(oracle::coeffVector(p), inner);
        const Complex got = evaluate(compose(p, q), z);
        // Relative to sum |a_j| (sum |b_i| |z|^i)^j, the magnitude of the
        // terms that cancel in the composed coefficients.
        double innerMagnitude = 0.0;
        for (std::size_t i = 0; i <= q.degree(); ++i)
            innerMagnitude += std::abs(q[i]) * std::pow(std::abs(z), static_cast<double>(i));
        double magnitude = 0.0;
        for (std::size_t j = 0; j <= p.degree(); ++j)
            magnitude += std::abs(p[j]) * std::pow(innerMagnitude, static_cast<double>(j));
        CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, magnitude));
    }
}

TEST_CASE("conjugate examples")
{
    const Polynomial sq = Polynomial::monomial(1.0, 2);
    CHECK(sameCoeffs(conjugate(sq, AffineMap::identity()), {0.0, 0.0, 1.0}));
    CHECK(sameCoeffs(conjugate(chebyshev(2), AffineMap::identity()), {-1.0, 0.0, 2.0}));
    // -T_2(-z) = -T_2(z) because T_2 is even.
    CHECK(sameCoeffs(conjugate(chebyshev(2), AffineMap(-1.0, 0.0)), {1.0, 0.0, -2.0}));
    // g p g^-1 with g(z) = 2z for p = z^2 - 2 is z^2/2 - 4.
    CHECK(sameCoeffs(conjugate(Polynomial({-2.0, 0.0, 1.0}), AffineMap(2.0, 0.0)), {-4.0, 0.0, 0.5}));
}

TEST_CASE("conjugate round trip")
{
    oracle::Random rng(17);
    for (int t = 0; t < 200; ++t) {
        const Polynomial p(rng.coefficients(rng.integer(1, 8)));
        const AffineMap g(std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 6.283)), rng.disk(2.0));
        const Polynomial mid = conjugate(p, g);
        const Polynomial back = conjugate(mid, g.inverse());
        CHECK(coefficientDistance(back, p) <= 1e-12 * std::max(p.scale(), mid.scale()));
    }
}

TEST_CASE("chebyshev examples and trigonometric identity")
{
    CHECK(sameCoeffs(chebyshev(2), {-1.0, 0.0, 2.0}));
    CHECK(sameCoeffs(chebyshev(1), {0.0, 1.0}));
    CHECK(sameCoeffs(chebyshev(4), {1.0, 0.0, -8.0, 0.0, 8.0}));
    CHECK_THROWS_AS(chebyshev(0), PolynomialError);
    oracle::Random rng(3);
    for (int d = 1; d <= 12; ++d) {
        const Polynomial t = chebyshev(d);
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const double th = rng.uniform(0.0, 2.0 * M_PI);
            worst = std::max(worst, std::abs(evaluate(t, std::cos(th)) - std::cos(d * th)));
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("escape radius examples and guarantee")
{
    CHECK(escapeRadius(Polynomial::monomial(1.0, 2)) == doctest::Approx(2.0));
    CHECK(escapeRadius(chebyshev(2)) == doctest::Approx(1.5));
    CHECK(escapeRadius(Polynomial({std::polar(1.0, 0.7), 0.0, 1.0})) == doctest::Approx(3.0));

    oracle::Random rng(23);
    for (int t = 0; t < 20; ++t) {
        std::vector<Complex> c = rng.coefficients(rng.integer(2, 7));
        c.back() *= rng.uniform(0.2, 3.0);
        const Polynomial p(c);
        const double R = escapeRadius(p);
        for (int k = 0; k < 1000; ++k) {
            const Complex z = std::polar(R, rng.uniform(0.0, 2.0 * M_PI));
            CHECK(std::abs(oracle::powerSum(c, z)) >= 2.0 * std::abs(z) - 1e-9);
        }
    }
}

TEST_CASE("coefficient string is the shortest round-trip form")
{
    CHECK(coefficientString(chebyshev(2)) == "-1,0,2");
    CHECK(coefficientString(Polynomial({Complex(0.0, 1.0), 0.0, 1.0})) == "0+1i,0,1");
    CHECK(coefficientString(Polynomial({Complex(0.1, -2.5), 1.0})) == "0.1-2.5i,1");
}
