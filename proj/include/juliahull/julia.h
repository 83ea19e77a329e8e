#pragma once

#include "juliahull/hull.h"
#include "juliahull/polynomial.h"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace juliahull {

class JuliaSamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InverseIterationOptions {
    double rootTol = 1e-10;
    /// Pullbacks discarded before recording; doubled when no repelling
    /// fixed point is available and the orbit starts at 1.
    std::size_t burnIn = 64;
    /// Alternative branches tried when a preimage solve fails.
    int branchRetries = 5;
};

/**
 * Inverse iteration: z <- a uniformly chosen root of p(.) - z, starting at
 * the most repelling fixed point. Consecutive points of the returned cloud
 * are consecutive orbit points, so p(points[k+1]) ~ points[k].
 */
PointCloud sampleJulia(const Polynomial& p, std::size_t n, std::uint64_t seed,
                       const InverseIterationOptions& options = {});

/// Boolean raster over a square. Row 0 is the bottom row (smallest
/// imaginary part); cell (x, y) is sampled at its center.
struct EscapeGrid {
    double originReal = 0.0;
    double originImag = 0.0;
    double cellSize = 1.0;
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> cells; // 1 = bounded orbit, row-major
    double radius = 0.0;
    int maxIter = 0;

    bool at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { cells[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    Complex center(int x, int y) const
    {
        return {originReal + (x + 0.5) * cellSize, originImag + (y + 0.5) * cellSize};
    }
    std::size_t trueCount() const;
    double trueArea() const { return static_cast<double>(trueCount()) * cellSize * cellSize; }
    double cellDiagonal() const { return cellSize * 1.4142135623730951; }
    std::vector<Complex> trueCenters() const;
};

/// Fraction of the escape radius added on every side of the grid square.
inline constexpr double kGridMargin = 0.05;

/// Escape-time raster of K_p over [-R - margin, R + margin]^2. A cell is
/// true iff the orbit of its center stays in |z| <= R for maxIter steps.
EscapeGrid escapeGrid(const Polynomial& p, int resolution, int maxIter);

/// Empty grid with the geometry escapeGrid would use.
EscapeGrid gridFrame(const Polynomial& p, int resolution, int maxIter);

/**
 * Fills every false cell not 4-connected to the grid border through false
 * cells. On a rasterized Julia set this yields the filled Julia set.
 */
EscapeGrid holoHullFill(const EscapeGrid& grid);

/// Marks every cell of `frame` that contains at least one cloud point.
EscapeGrid rasterize(const PointCloud& cloud, EscapeGrid frame);

/**
 * Escape-time approximation of J_p independent of inverse iteration:
 * centers of bounded cells next to an escaping cell, plus escaping cells
 * whose Green-function distance estimate is within one cell diagonal. The
 * second set keeps thin Julia sets (segments, dendrites) that no cell
 * center hits exactly.
 */
PointCloud gridBoundaryCloud(const Polynomial& p, int resolution, int maxIter);

/// Binary PGM (P5): 0 = escaping, 255 = bounded; the header comment records
/// the escape radius, iteration cap and polynomial.
void writePgm(std::ostream& os, const EscapeGrid& grid, const std::string& polynomial);

} // namespace juliahull
