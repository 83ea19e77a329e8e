#pragma once

#include "juliahull/polynomial.h"
#include "juliahull/rng.h"

#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace juliahull {

enum class CloudLabel { JuliaSample, Generic };

/// Finite planar sample. JuliaSample clouds lie within the escape radius.
struct PointCloud {
    std::vector<Complex> points;
    CloudLabel label = CloudLabel::Generic;
};

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class HullKind { Proper, Segment, Point };

/**
 * Convex polygon with counter-clockwise vertices. Proper polygons have at
 * least three strictly convex vertices; Segment has its two endpoints and
 * Point a single vertex.
 *
 * Edge normals and offsets are cached so that the inside distance of a
 * point is a single pass of multiply-adds.
 */
class ConvexPolygon {
public:
    /// Trusts the caller: vertices must already be CCW and strictly convex.
    ConvexPolygon(std::vector<Complex> vertices, HullKind kind);

    std::span<const Complex> vertices() const { return vertices_; }
    HullKind kind() const { return kind_; }
    std::size_t size() const { return vertices_.size(); }

    double diameter() const { return diameter_; }
    double area() const;
    double perimeter() const;

    /// O(log n) point-in-polygon with closed boundary. Segment and Point
    /// hulls contain nothing in this sense.
    bool containsFast(Complex z) const;

private:
    friend double signedDistance(const ConvexPolygon&, Complex);

    std::vector<Complex> vertices_;
    HullKind kind_;
    double diameter_ = 0.0;
    // Outward unit normal n_i and offset c_i of edge i: <z, n_i> <= c_i inside.
    std::vector<Complex> normals_;
    std::vector<double> offsets_;
};

/// {z : <z, normal> >= offset}, <.,.> being the real inner product of R^2.
struct HalfPlane {
    Complex normal;
    double offset = 0.0;

    /// <z, normal> - offset; nonnegative inside.
    double value(Complex z) const { return z.real() * normal.real() + z.imag() * normal.imag() - offset; }
    bool contains(Complex z) const { return value(z) >= 0.0; }
};

inline double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }
inline double cross(Complex o, Complex a, Complex b)
{
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

/// Andrew's monotone chain. Collinear and duplicate points are dropped;
/// turns with |cross| <= 1e-14 * scale^2 count as collinear.
ConvexPolygon convexHull(std::span<const Complex> points);
inline ConvexPolygon convexHull(const PointCloud& cloud) { return convexHull(cloud.points); }

/// Negative inside, zero on the boundary, positive outside; the magnitude
/// is the Euclidean distance to the boundary. Segment and Point hulls give
/// the (nonnegative) distance to the segment or point.
double signedDistance(const ConvexPolygon& P, Complex z);

/// max(0, signedDistance(P, z)), with an O(log n) early exit for inside points.
double outsideDistance(const ConvexPolygon& P, Complex z);

/// Half-plane containing z and disjoint from P, built from the nearest
/// boundary point q: normal (z - q)/|z - q|, boundary through (z + q)/2.
HalfPlane separatingHalfPlane(const ConvexPolygon& P, Complex z);

/// Symmetric Hausdorff distance between finite point sets.
double hausdorff(std::span<const Complex> a, std::span<const Complex> b);
inline double hausdorff(const PointCloud& a, const PointCloud& b) { return hausdorff(a.points, b.points); }

/// Hausdorff distance between the convex regions P and Q. Exact: distance
/// to a convex set is convex, so each directed sup sits at a vertex.
double hullHausdorff(const ConvexPolygon& P, const ConvexPolygon& Q);

/// Image of every vertex under g, rehulled.
ConvexPolygon transformed(const ConvexPolygon& P, const AffineMap& g);

/// m points spaced uniformly by arc length around the boundary, starting
/// at vertex 0. A Segment boundary is traversed there and back.
std::vector<Complex> boundarySamples(const ConvexPolygon& P, std::size_t m);

/// k random convex combinations of three vertices with flat Dirichlet
/// weights; every sample lies in P.
std::vector<Complex> interiorSamples(const ConvexPolygon& P, std::size_t k, CounterRng& rng);

struct SegmentShape {
    Complex first;
    Complex second;
    double residual; // max distance to the fitted line
};
struct CircleShape {
    Complex center;
    double radius;
    double residual; // max | |z - center| - radius |
};
struct GenericShape {
    double lineResidual;
    double circleResidual;
};
using Shape = std::variant<SegmentShape, CircleShape, GenericShape>;

struct CircleFit {
    Complex center;
    double radius;
    double maxResidual;
};

/// Algebraic (Kasa) fit followed by one Gauss-Newton step on the geometric
/// residual.
CircleFit fitCircle(std::span<const Complex> points);

/// Segment if the total-least-squares line fits within tolRel * diameter;
/// otherwise Circle if the circle fit is within tolRel * radius; otherwise
/// Generic. The segment test runs first so huge flat circles become segments.
Shape classifyShape(std::span<const Complex> points, double tolRel = 1e-3);
inline Shape classifyShape(const PointCloud& cloud, double tolRel = 1e-3) { return classifyShape(cloud.points, tolRel); }

} // namespace juliahull
