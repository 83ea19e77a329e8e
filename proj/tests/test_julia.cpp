#include "oracles.h"

#include "juliahull/julia.h"
#include "juliahull/roots.h"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace juliahull;

TEST_CASE("z^2 samples lie on the unit circle")
{
    const auto cloud = sampleJulia(Polynomial::monomial(1.0, 2), 20000, 9);
    CHECK(cloud.points.size() == 20000);
    CHECK(cloud.label == CloudLabel::JuliaSample);
    double worst = 0.0;
    for (const auto& z : cloud.points)
        worst = std::max(worst, std::abs(std::abs(z) - 1.0));
    CHECK(worst <= 1e-6);
}

TEST_CASE("T_2 samples lie on [-1, 1]")
{
    const auto cloud = sampleJulia(chebyshev(2), 20000, 4);
    double worst = 0.0;
    for (const auto& z : cloud.points) {
        const double dx = std::max(0.0, std::abs(z.real()) - 1.0);
        worst = std::max(worst, std::hypot(dx, z.imag()));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("consecutive samples are one pullback apart")
{
    const Polynomial p({Complex(0.1, 0.6), 0.4, Complex(0.0, 0.5), 1.0});
    const auto cloud = sampleJulia(p, 5000, 2);
    for (std::size_t k = 0; k + 1 < cloud.points.size(); ++k)
        REQUIRE(std::abs(evaluate(p, cloud.points[k + 1]) - cloud.points[k]) <= 1e-8);
}

TEST_CASE("sampleJulia is deterministic per seed")
{
    const Polynomial p({-1.0, 0.0, 1.0});
    CHECK(sampleJulia(p, 1000, 5).points == sampleJulia(p, 1000, 5).points);
    CHECK(sampleJulia(p, 1000, 5).points != sampleJulia(p, 1000, 6).points);
}

TEST_CASE("one more pullback leaves the hull in place")
{
    const Polynomial p({-1.0, 0.0, 1.0});
    const auto cloud = sampleJulia(p, 100000, 1);
    std::vector<Complex> pulled;
    for (const auto& z : cloud.points)
        for (const auto& w : preimages(p, z, 1e-10).roots)
            pulled.push_back(w);
    const auto H = convexHull(cloud), H1 = convexHull(pulled);
    CHECK(hullHausdorff(H, H1) <= 1e-2 * H.diameter());
}

TEST_CASE("samples are affinely equivariant")
{
    const Polynomial p({Complex(0.0, 0.25), 0.0, 1.0});
    const AffineMap g(2.0, Complex(0.0, 1.0));
    const auto a = sampleJulia(p, 100000, 3);
    const auto b = sampleJulia(conjugate(p, g), 100000, 8);
    std::vector<Complex> moved;
    for (const auto& z : a.points)
        moved.push_back(g(z));
    const double diam = convexHull(b).diameter();
    CHECK(hausdorff(moved, b.points) <= 1e-2 * diam);
}

TEST_CASE("escape grid of z^2 approximates the unit disk")
{
    const auto grid = escapeGrid(Polynomial::monomial(1.0, 2), 512, 256);
    CHECK(grid.trueArea() / M_PI == doctest::Approx(1.0).epsilon(0.02));
    CHECK(grid.originReal <= -grid.radius);
    CHECK(grid.originImag <= -grid.radius);
    CHECK(grid.originReal + grid.width * grid.cellSize >= grid.radius);
    CHECK(grid.originImag + grid.height * grid.cellSize >= grid.radius);
    for (const auto& z : grid.trueCenters())
        REQUIRE(std::abs(z) <= grid.radius);
}

TEST_CASE("escaping critical orbit leaves almost no bounded cells")
{
    const Polynomial p({4.0, 0.0, 1.0});
    const double R = escapeRadius(p);
    // Orbit of the critical point leaves the escape disk quickly.
    Complex z = 0.0;
    int steps = 0;
    while (std::abs(z) <= R && steps < 10) {
        z = z * z + 4.0;
        ++steps;
    }
    REQUIRE(std::abs(z) > R);
    const auto grid = escapeGrid(p, 512, 256);
    CHECK(grid.trueArea() < 0.05 * M_PI * R * R);
    for (const auto& c : grid.trueCenters())
        REQUIRE(std::abs(c) <= R);
}

TEST_CASE("bounded cells have bounded orbits")
{
    const Polynomial p({Complex(-0.12, 0.75), 0.0, 1.0});
    const auto grid = escapeGrid(p, 128, 100);
    for (const auto& c : grid.trueCenters()) {
        Complex z = c;
        for (int k = 0; k < 100; ++k) {
            z = z * z + Complex(-0.12, 0.75);
            REQUIRE(std::abs(z) <= grid.radius);
        }
    }
}

TEST_CASE("raising maxIter never adds bounded cells")
{
    const Polynomial p({-0.75, 0.0, 1.0});
    const auto lo = escapeGrid(p, 256, 60), hi = escapeGrid(p, 256, 240);
    for (std::size_t i = 0; i < lo.cells.size(); ++i)
        REQUIRE(!(hi.cells[i] && !lo.cells[i]));
}

TEST_CASE("escape grid does not depend on the worker count")
{
    const Polynomial p({Complex(0.28, 0.01), 0.0, 1.0});
    setenv("JULIAHULL_THREADS", "1", 1);
    const auto one = escapeGrid(p, 256, 128);
    setenv("JULIAHULL_THREADS", "4", 1);
    const auto four = escapeGrid(p, 256, 128);
    unsetenv("JULIAHULL_THREADS");
    CHECK(one.cells == four.cells);
}

TEST_CASE("hull fill is idempotent on a filled grid")
{
    const auto grid = escapeGrid(Polynomial::monomial(1.0, 2), 256, 128);
    CHECK(holoHullFill(grid).cells == grid.cells);
}

TEST_CASE("hull fill turns an annulus into a disk")
{
    EscapeGrid g = gridFrame(Polynomial::monomial(1.0, 2), 128, 64);
    for (int y = 0; y < g.height; ++y)
        for (int x = 0; x < g.width; ++x) {
            const double r = std::abs(g.center(x, y));
            g.set(x, y, r >= 0.8 && r <= 1.0);
        }
    const auto filled = holoHullFill(g);
    for (int y = 0; y < g.height; ++y)
        for (int x = 0; x < g.width; ++x)
            REQUIRE(filled.at(x, y) == (std::abs(g.center(x, y)) <= 1.0));
}

TEST_CASE("filled rasterized Julia cloud brackets the escape grid area")
{
    const Polynomial p({-1.0, 0.0, 1.0});
    const int res = 256;
    const auto grid = escapeGrid(p, res, 256);
    const auto cloud = sampleJulia(p, 100000, 1);
    const auto raster = rasterize(cloud, gridFrame(p, res, 256));
    const auto filled = holoHullFill(raster);
    // Cells touched by J straddle the boundary of K, so the fill without
    // them is a lower bound and the fill with them an upper bound.
    const double enclosed = filled.trueArea() - raster.trueArea();
    CHECK(enclosed <= grid.trueArea());
    CHECK(grid.trueArea() <= filled.trueArea());
    // No leak: the enclosed part carries most of the area.
    CHECK(enclosed >= 0.8 * grid.trueArea());
}

TEST_CASE("grid boundary cloud of T_2 hugs the segment")
{
    const auto cloud = gridBoundaryCloud(chebyshev(2), 512, 256);
    REQUIRE(!cloud.points.empty());
    const auto frame = gridFrame(chebyshev(2), 512, 256);
    for (const auto& z : cloud.points) {
        const double dx = std::max(0.0, std::abs(z.real()) - 1.0);
        REQUIRE(std::hypot(dx, z.imag()) <= 2.0 * frame.cellDiagonal());
    }
}

TEST_CASE("sampled z^2 - 1 hull diameter matches the grid oracle")
{
    const Polynomial p({-1.0, 0.0, 1.0});
    const auto sample = convexHull(sampleJulia(p, 100000, 1));
    const auto oracleHull = convexHull(gridBoundaryCloud(p, 2048, 256));
    CHECK(sample.diameter() == doctest::Approx(oracleHull.diameter()).epsilon(0.01));
}

TEST_CASE("PGM sidecar layout")
{
    const auto grid = escapeGrid(Polynomial::monomial(1.0, 2), 64, 50);
    std::ostringstream os;
    writePgm(os, grid, "0,0,1");
    const std::string s = os.str();
    CHECK(s.rfind("P5\n# R=", 0) == 0);
    CHECK(s.find("polynomial=0,0,1") != std::string::npos);
    const std::size_t header = s.find("255\n");
    REQUIRE(header != std::string::npos);
    CHECK(s.size() - (header + 4) == static_cast<std::size_t>(grid.width * grid.height));
    // First written row is the top row.
    const int y = grid.height - 1;
    for (int x = 0; x < grid.width; ++x)
        REQUIRE(static_cast<unsigned char>(s[header + 4 + x]) == (grid.at(x, y) ? 255 : 0));
}

TEST_CASE("grid argument validation")
{
    CHECK_THROWS(escapeGrid(Polynomial::monomial(1.0, 2), 32, 256));
    CHECK_THROWS(escapeGrid(Polynomial::monomial(1.0, 2), 256, 10));
}
