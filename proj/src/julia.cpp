#include "juliahull/julia.h"

#include "juliahull/parallel.h"
#include "juliahull/rng.h"
#include "juliahull/roots.h"

#include <cmath>
#include <deque>
#include <ostream>

namespace juliahull {

namespace {

constexpr std::uint64_t kBranchStream = 0x4a554c4941ULL;

// Bailout used when a distance estimate is wanted; the estimate is only
// accurate once |z| is large.
constexpr double kEstimateBailout = 1e8;

} // namespace

PointCloud sampleJulia(const Polynomial& p, std::size_t n, std::uint64_t seed,
                       const InverseIterationOptions& options)
{
    if (p.degree() < 2)
        throw PolynomialError("sampleJulia: degree must be >= 2");
    if (n == 0)
        throw JuliaSamplingError("sampleJulia: n must be positive");

    Complex z{1.0, 0.0};
    std::size_t burnIn = 2 * options.burnIn;
    try {
        z = repellingFixedPoint(p, options.rootTol);
        burnIn = options.burnIn;
    } catch (const NoRepellingFixedPoint&) {
    } catch (const RootError&) {
    }

    RootSet current;
    try {
        current = preimages(p, z, options.rootTol);
    } catch (const RootError& e) {
        throw JuliaSamplingError(std::string("sampleJulia: cannot pull back the seed point: ") + e.what());
    }

    CounterRng rng(seed, kBranchStream);
    const std::size_t d = p.degree();
    PointCloud cloud;
    cloud.label = CloudLabel::JuliaSample;
    cloud.points.reserve(n);

    for (std::size_t step = 0; step < burnIn + n; ++step) {
        std::size_t branch = rng.below(d);
        Complex next = current.roots[branch];
        RootSet nextRoots;
        bool solved = false;
        for (int attempt = 0; attempt <= options.branchRetries && !solved; ++attempt) {
            if (attempt > 0) {
                branch = (branch + 1) % d;
                next = current.roots[branch];
            }
            try {
                nextRoots = preimages(p, next, options.rootTol);
                solved = true;
            } catch (const RootError&) {
            }
        }
        if (!solved)
            throw JuliaSamplingError("sampleJulia: preimage solve failed on every branch at step " +
                                     std::to_string(step));
        if (step >= burnIn)
            cloud.points.push_back(next);
        current = std::move(nextRoots);
    }
    return cloud;
}

std::size_t EscapeGrid::trueCount() const
{
    std::size_t c = 0;
    for (auto v : cells)
        c += v ? 1 : 0;
    return c;
}

std::vector<Complex> EscapeGrid::trueCenters() const
{
    std::vector<Complex> out;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (at(x, y))
                out.push_back(center(x, y));
    return out;
}

EscapeGrid gridFrame(const Polynomial& p, int resolution, int maxIter)
{
    if (resolution < 1)
        throw std::invalid_argument("grid resolution must be positive");
    const double R = escapeRadius(p);
    const double half = R * (1.0 + kGridMargin);
    EscapeGrid g;
    g.originReal = -half;
    g.originImag = -half;
    g.cellSize = 2.0 * half / resolution;
    g.width = resolution;
    g.height = resolution;
    g.cells.assign(static_cast<std::size_t>(resolution) * resolution, 0);
    g.radius = R;
    g.maxIter = maxIter;
    return g;
}

EscapeGrid escapeGrid(const Polynomial& p, int resolution, int maxIter)
{
    if (resolution < 64)
        throw std::invalid_argument("escapeGrid: resolution must be >= 64");
    if (maxIter < 50)
        throw std::invalid_argument("escapeGrid: maxIter must be >= 50");
    EscapeGrid g = gridFrame(p, resolution, maxIter);
    const double R = g.radius;
    parallelFor(static_cast<std::size_t>(g.height), [&](std::size_t row) {
        const int y = static_cast<int>(row);
        for (int x = 0; x < g.width; ++x) {
            Complex z = g.center(x, y);
            bool bounded = std::abs(z) <= R;
            for (int k = 0; k < maxIter && bounded; ++k) {
                z = evaluate(p, z);
                bounded = std::abs(z) <= R;
            }
            g.set(x, y, bounded);
        }
    });
    return g;
}

EscapeGrid holoHullFill(const EscapeGrid& grid)
{
    const int w = grid.width, h = grid.height;
    std::vector<std::uint8_t> outside(grid.cells.size(), 0);
    std::deque<std::pair<int, int>> queue;
    auto seed = [&](int x, int y) {
        const std::size_t i = static_cast<std::size_t>(y) * w + x;
        if (!grid.cells[i] && !outside[i]) {
            outside[i] = 1;
            queue.emplace_back(x, y);
        }
    };
    for (int x = 0; x < w; ++x) {
        seed(x, 0);
        seed(x, h - 1);
    }
    for (int y = 0; y < h; ++y) {
        seed(0, y);
        seed(w - 1, y);
    }
    while (!queue.empty()) {
        const auto [x, y] = queue.front();
        queue.pop_front();
        if (x > 0)
            seed(x - 1, y);
        if (x + 1 < w)
            seed(x + 1, y);
        if (y > 0)
            seed(x, y - 1);
        if (y + 1 < h)
            seed(x, y + 1);
    }
    EscapeGrid filled = grid;
    for (std::size_t i = 0; i < filled.cells.size(); ++i)
        filled.cells[i] = outside[i] ? 0 : 1;
    return filled;
}

EscapeGrid rasterize(const PointCloud& cloud, EscapeGrid frame)
{
    std::fill(frame.cells.begin(), frame.cells.end(), 0);
    for (const auto& z : cloud.points) {
        const double fx = (z.real() - frame.originReal) / frame.cellSize;
        const double fy = (z.imag() - frame.originImag) / frame.cellSize;
        if (!(fx >= 0.0 && fy >= 0.0 && fx < frame.width && fy < frame.height))
            continue;
        frame.set(static_cast<int>(fx), static_cast<int>(fy), true);
    }
    return frame;
}

PointCloud gridBoundaryCloud(const Polynomial& p, int resolution, int maxIter)
{
    const EscapeGrid grid = escapeGrid(p, resolution, maxIter);
    const double R = grid.radius;
    const double reach = grid.cellDiagonal();
    const Polynomial slope = derivative(p);
    const double d = static_cast<double>(p.degree());
    const double leadShift = std::log(std::abs(p.leading())) / (d - 1.0);

    std::vector<std::uint8_t> near(grid.cells.size(), 0);
    parallelFor(static_cast<std::size_t>(grid.height), [&](std::size_t row) {
        const int y = static_cast<int>(row);
        for (int x = 0; x < grid.width; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * grid.width + x;
            if (grid.cells[i]) {
                const bool touches = (x > 0 && !grid.at(x - 1, y)) || (x + 1 < grid.width && !grid.at(x + 1, y)) ||
                                     (y > 0 && !grid.at(x, y - 1)) || (y + 1 < grid.height && !grid.at(x, y + 1));
                near[i] = touches ? 1 : 0;
                continue;
            }
            // Escaping cell: distance estimate |z_n| (log|z_n| + log|a_d|/(d-1)) / |z_n'|.
            Complex z = grid.center(x, y);
            Complex dz{1.0, 0.0};
            int k = 0;
            const int cap = maxIter + 200;
            while (std::abs(z) <= kEstimateBailout && k < cap) {
                dz *= evaluate(slope, z);
                z = evaluate(p, z);
                ++k;
            }
            const double mod = std::abs(z);
            if (!(mod > R) || !std::isfinite(mod) || std::abs(dz) == 0.0)
                continue;
            const double green = std::log(mod) + leadShift;
            const double estimate = mod * green / std::abs(dz);
            near[i] = (std::isfinite(estimate) && estimate <= reach) ? 1 : 0;
        }
    });

    PointCloud cloud;
    for (int y = 0; y < grid.height; ++y)
        for (int x = 0; x < grid.width; ++x)
            if (near[static_cast<std::size_t>(y) * grid.width + x])
                cloud.points.push_back(grid.center(x, y));
    if (cloud.points.empty())
        throw JuliaSamplingError("gridBoundaryCloud: no boundary cells at this resolution");
    return cloud;
}

void writePgm(std::ostream& os, const EscapeGrid& grid, const std::string& polynomial)
{
    os << "P5\n";
    os << "# R=" << grid.radius << " maxIter=" << grid.maxIter << " polynomial=" << polynomial << "\n";
    os << grid.width << ' ' << grid.height << "\n255\n";
    std::string row(static_cast<std::size_t>(grid.width), '\0');
    for (int y = grid.height - 1; y >= 0; --y) {
        for (int x = 0; x < grid.width; ++x)
            row[static_cast<std::size_t>(x)] = static_cast<char>(grid.at(x, y) ? 255 : 0);
        os.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

} // namespace juliahull
