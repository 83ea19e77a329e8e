#include "juliahull/hull.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace juliahull {

namespace {

bool lexLess(Complex a, Complex b)
{
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

double segmentDistance(Complex a, Complex b, Complex z)
{
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0)
        return std::abs(z - a);
    const double t = std::clamp(dot(z - a, ab) / len2, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
}

Complex nearestOnSegment(Complex a, Complex b, Complex z)
{
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0)
        return a;
    const double t = std::clamp(dot(z - a, ab) / len2, 0.0, 1.0);
    return a + t * ab;
}

double boundaryDistance(std::span<const Complex> v, Complex z)
{
    const std::size_t n = v.size();
    if (n == 1)
        return std::abs(z - v[0]);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, segmentDistance(v[i], v[(i + 1) % n], z));
    return best;
}

double caliperDiameter(std::span<const Complex> v)
{
    const std::size_t n = v.size();
    if (n < 2)
        return 0.0;
    if (n == 2)
        return std::abs(v[1] - v[0]);
    double best = 0.0;
    std::size_t j = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t i1 = (i + 1) % n;
        while (std::abs(cross(v[i], v[i1], v[(j + 1) % n])) > std::abs(cross(v[i], v[i1], v[j])))
            j = (j + 1) % n;
        best = std::max({best, std::abs(v[i] - v[j]), std::abs(v[i1] - v[j])});
    }
    return best;
}

// Uniform bucket grid over a point set for nearest-neighbour queries.
class BucketGrid {
public:
    explicit BucketGrid(std::span<const Complex> pts) : pts_(pts)
    {
        double xmin = pts[0].real(), xmax = xmin, ymin = pts[0].imag(), ymax = ymin;
        for (const auto& p : pts) {
            xmin = std::min(xmin, p.real());
            xmax = std::max(xmax, p.real());
            ymin = std::min(ymin, p.imag());
            ymax = std::max(ymax, p.imag());
        }
        origin_ = {xmin, ymin};
        const double extent = std::max({xmax - xmin, ymax - ymin, 1e-300});
        const std::size_t side = std::clamp<std::size_t>(
            static_cast<std::size_t>(std::sqrt(static_cast<double>(pts.size()))), 1, 2048);
        cell_ = extent / static_cast<double>(side);
        nx_ = std::min<std::size_t>(static_cast<std::size_t>((xmax - xmin) / cell_) + 1, side + 1);
        ny_ = std::min<std::size_t>(static_cast<std::size_t>((ymax - ymin) / cell_) + 1, side + 1);
        start_.assign(nx_ * ny_ + 1, 0);
        std::vector<std::size_t> key(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            key[i] = bucketOf(pts[i]);
            ++start_[key[i] + 1];
        }
        for (std::size_t b = 0; b < nx_ * ny_; ++b)
            start_[b + 1] += start_[b];
        order_.resize(pts.size());
        std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
        for (std::size_t i = 0; i < pts.size(); ++i)
            order_[fill[key[i]]++] = i;
    }

    double nearest(Complex z) const
    {
        const long cx = clampIndex((z.real() - origin_.real()) / cell_, nx_);
        const long cy = clampIndex((z.imag() - origin_.imag()) / cell_, ny_);
        double best = std::numeric_limits<double>::infinity();
        const long maxRing = static_cast<long>(std::max(nx_, ny_));
        for (long ring = 0; ring <= maxRing; ++ring) {
            // Cells in this ring are at least (ring - 1) cells from z, even
            // when z was clamped onto the grid from outside.
            if (best < (static_cast<double>(ring) - 1.0) * cell_)
                break;
            for (long y = cy - ring; y <= cy + ring; ++y) {
                if (y < 0 || y >= static_cast<long>(ny_))
                    continue;
                const bool edgeRow = (y == cy - ring || y == cy + ring);
                const long stride = edgeRow ? 1 : 2 * ring;
                for (long x = cx - ring; x <= cx + ring; x += stride)
                    if (x >= 0 && x < static_cast<long>(nx_))
                        scan(static_cast<std::size_t>(y) * nx_ + static_cast<std::size_t>(x), z, best);
            }
        }
        return best;
    }

private:
    std::size_t bucketOf(Complex p) const
    {
        const auto x = static_cast<std::size_t>(clampIndex((p.real() - origin_.real()) / cell_, nx_));
        const auto y = static_cast<std::size_t>(clampIndex((p.imag() - origin_.imag()) / cell_, ny_));
        return y * nx_ + x;
    }

    static long clampIndex(double v, std::size_t n)
    {
        if (!(v > 0.0))
            return 0;
        const double last = static_cast<double>(n - 1);
        return static_cast<long>(std::min(v, last));
    }

    void scan(std::size_t bucket, Complex z, double& best) const
    {
        for (std::size_t k = start_[bucket]; k < start_[bucket + 1]; ++k)
            best = std::min(best, std::abs(z - pts_[order_[k]]));
    }

    std::span<const Complex> pts_;
    Complex origin_;
    double cell_ = 1.0;
    std::size_t nx_ = 1, ny_ = 1;
    std::vector<std::size_t> start_;
    std::vector<std::size_t> order_;
};

double directedHausdorff(std::span<const Complex> from, std::span<const Complex> to)
{
    const BucketGrid grid(to);
    double worst = 0.0;
    for (const auto& z : from)
        worst = std::max(worst, grid.nearest(z));
    return worst;
}

} // namespace

ConvexPolygon::ConvexPolygon(std::vector<Complex> vertices, HullKind kind)
    : vertices_(std::move(vertices)), kind_(kind)
{
    const std::size_t n = vertices_.size();
    if (n == 0)
        throw GeometryError("empty polygon");
    if ((kind_ == HullKind::Point && n != 1) || (kind_ == HullKind::Segment && n != 2) ||
        (kind_ == HullKind::Proper && n < 3))
        throw GeometryError("vertex count does not match hull kind");
    diameter_ = caliperDiameter(vertices_);
    if (kind_ == HullKind::Proper) {
        normals_.resize(n);
        offsets_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Complex e = vertices_[(i + 1) % n] - vertices_[i];
            const Complex outward = Complex{e.imag(), -e.real()} / std::abs(e);
            normals_[i] = outward;
            offsets_[i] = dot(vertices_[i], outward);
        }
    }
}

double ConvexPolygon::area() const
{
    if (kind_ != HullKind::Proper)
        return 0.0;
    double twice = 0.0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = vertices_[i], b = vertices_[(i + 1) % n];
        twice += a.real() * b.imag() - a.imag() * b.real();
    }
    return 0.5 * twice;
}

double ConvexPolygon::perimeter() const
{
    const std::size_t n = vertices_.size();
    if (n == 1)
        return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        total += std::abs(vertices_[(i + 1) % n] - vertices_[i]);
    return total;
}

bool ConvexPolygon::containsFast(Complex z) const
{
    if (kind_ != HullKind::Proper)
        return false;
    const auto& v = vertices_;
    const std::size_t n = v.size();
    if (cross(v[0], v[1], z) < 0.0 || cross(v[0], v[n - 1], z) > 0.0)
        return false;
    // Find the fan wedge (v0, v[lo], v[lo+1]) containing z.
    std::size_t lo = 1, hi = n - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (cross(v[0], v[mid], z) >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return cross(v[lo], v[lo + 1], z) >= 0.0;
}

ConvexPolygon convexHull(std::span<const Complex> points)
{
    if (points.empty())
        throw GeometryError("convex hull of an empty set");

    std::vector<Complex> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lexLess);

    double xmin = pts.front().real(), xmax = pts.back().real();
    double ymin = pts[0].imag(), ymax = ymin;
    for (const auto& p : pts) {
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
    }
    const double scale = std::max(xmax - xmin, ymax - ymin);
    const double dupTol = 1e-12 * scale;
    const double lineTol = 1e-14 * scale;

    std::vector<Complex> unique;
    unique.reserve(pts.size());
    for (const auto& p : pts)
        if (unique.empty() || std::abs(p - unique.back()) > dupTol)
            unique.push_back(p);

    if (unique.size() == 1 || scale == 0.0)
        return ConvexPolygon({unique.front()}, HullKind::Point);

    // b is dropped on a right turn, or when it lies on segment ac up to
    // lineTol. Ties are judged by distance, not by the raw cross product:
    // with a and c nearly coincident the cross product is tiny even for a
    // far-away b.
    auto drop = [&](Complex a, Complex b, Complex c) {
        const double turn = cross(a, b, c);
        if (turn <= 0.0)
            return true;
        const Complex ac = c - a;
        const double along = dot(b - a, ac);
        return turn <= lineTol * std::abs(ac) && along >= 0.0 && along <= std::norm(ac);
    };

    const std::size_t n = unique.size();
    std::vector<Complex> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && drop(hull[k - 2], hull[k - 1], unique[i]))
            --k;
        hull[k++] = unique[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && drop(hull[k - 2], hull[k - 1], unique[i]))
            --k;
        hull[k++] = unique[i];
    }
    hull.resize(k - 1); // last point repeats the first

    if (hull.size() <= 2)
        return ConvexPolygon({hull.front(), hull.back()}, HullKind::Segment);
    return ConvexPolygon(std::move(hull), HullKind::Proper);
}

double signedDistance(const ConvexPolygon& P, Complex z)
{
    const auto v = P.vertices();
    if (P.kind() != HullKind::Proper)
        return boundaryDistance(v, z);

    // Inside: distance to the nearest supporting line. Outside: distance to
    // the nearest edge segment.
    double deepest = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < P.normals_.size(); ++i)
        deepest = std::max(deepest, dot(z, P.normals_[i]) - P.offsets_[i]);
    if (deepest <= 0.0)
        return deepest;
    return boundaryDistance(v, z);
}

double outsideDistance(const ConvexPolygon& P, Complex z)
{
    if (P.containsFast(z))
        return 0.0;
    return std::max(0.0, signedDistance(P, z));
}

HalfPlane separatingHalfPlane(const ConvexPolygon& P, Complex z)
{
    if (!(signedDistance(P, z) > 0.0))
        throw GeometryError("point not strictly outside");
    const auto v = P.vertices();
    Complex nearest = v[0];
    double best = std::abs(z - v[0]);
    if (v.size() > 1) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Complex q = nearestOnSegment(v[i], v[(i + 1) % v.size()], z);
            const double d = std::abs(z - q);
            if (d < best) {
                best = d;
                nearest = q;
            }
        }
    }
    const Complex normal = (z - nearest) / std::abs(z - nearest);
    return {normal, dot(0.5 * (z + nearest), normal)};
}

double hausdorff(std::span<const Complex> a, std::span<const Complex> b)
{
    if (a.empty() || b.empty())
        throw GeometryError("hausdorff of an empty set");
    return std::max(directedHausdorff(a, b), directedHausdorff(b, a));
}

double hullHausdorff(const ConvexPolygon& P, const ConvexPolygon& Q)
{
    double worst = 0.0;
    for (const auto& v : P.vertices())
        worst = std::max(worst, outsideDistance(Q, v));
    for (const auto& v : Q.vertices())
        worst = std::max(worst, outsideDistance(P, v));
    return worst;
}

ConvexPolygon transformed(const ConvexPolygon& P, const AffineMap& g)
{
    std::vector<Complex> image;
    image.reserve(P.size());
    for (const auto& v : P.vertices())
        image.push_back(g(v));
    return convexHull(image);
}

std::vector<Complex> boundarySamples(const ConvexPolygon& P, std::size_t m)
{
    const auto v = P.vertices();
    std::vector<Complex> out;
    out.reserve(m);
    const double total = P.perimeter();
    if (v.size() == 1 || total == 0.0) {
        out.assign(m, v[0]);
        return out;
    }
    const std::size_t n = v.size();
    std::size_t edge = 0;
    double edgeStart = 0.0;
    double edgeLen = std::abs(v[1 % n] - v[0]);
    for (std::size_t s = 0; s < m; ++s) {
        const double target = total * static_cast<double>(s) / static_cast<double>(m);
        while (edgeStart + edgeLen < target && edge + 1 < n) {
            edgeStart += edgeLen;
            ++edge;
            edgeLen = std::abs(v[(edge + 1) % n] - v[edge]);
        }
        const double t = edgeLen > 0.0 ? std::clamp((target - edgeStart) / edgeLen, 0.0, 1.0) : 0.0;
        out.push_back(v[edge] + t * (v[(edge + 1) % n] - v[edge]));
    }
    return out;
}

std::vector<Complex> interiorSamples(const ConvexPolygon& P, std::size_t k, CounterRng& rng)
{
    const auto v = P.vertices();
    std::vector<Complex> out;
    out.reserve(k);
    for (std::size_t s = 0; s < k; ++s) {
        double w[3];
        double sum = 0.0;
        Complex picks[3];
        for (int j = 0; j < 3; ++j) {
            picks[j] = v[rng.below(v.size())];
            w[j] = -std::log(1.0 - rng.uniform());
            sum += w[j];
        }
        if (sum == 0.0) {
            out.push_back(picks[0]);
            continue;
        }
        out.push_back((w[0] * picks[0] + w[1] * picks[1] + w[2] * picks[2]) / sum);
    }
    return out;
}

CircleFit fitCircle(std::span<const Complex> points)
{
    if (points.size() < 3)
        throw GeometryError("circle fit needs at least three points");

    // Work in centered, scaled coordinates for conditioning.
    Complex mean{};
    for (const auto& p : points)
        mean += p;
    mean /= static_cast<double>(points.size());
    double spread = 0.0;
    for (const auto& p : points)
        spread = std::max(spread, std::abs(p - mean));
    if (spread == 0.0)
        throw GeometryError("circle fit of coincident points");

    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd A(n, 3);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex q = (points[static_cast<std::size_t>(i)] - mean) / spread;
        A(i, 0) = q.real();
        A(i, 1) = q.imag();
        A(i, 2) = 1.0;
        b(i) = std::norm(q);
    }
    const Eigen::Vector3d c = A.colPivHouseholderQr().solve(b);
    double cx = 0.5 * c(0), cy = 0.5 * c(1);
    double r = std::sqrt(std::max(0.0, c(2) + cx * cx + cy * cy));

    // One Gauss-Newton step on d_i - r.
    Eigen::MatrixXd J(n, 3);
    Eigen::VectorXd res(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex q = (points[static_cast<std::size_t>(i)] - mean) / spread;
        const double dx = q.real() - cx, dy = q.imag() - cy;
        const double d = std::max(std::hypot(dx, dy), 1e-300);
        J(i, 0) = -dx / d;
        J(i, 1) = -dy / d;
        J(i, 2) = -1.0;
        res(i) = d - r;
    }
    const Eigen::Vector3d delta = J.colPivHouseholderQr().solve(-res);
    if (delta.allFinite()) {
        cx += delta(0);
        cy += delta(1);
        r += delta(2);
    }

    CircleFit fit;
    fit.center = mean + spread * Complex{cx, cy};
    fit.radius = spread * std::abs(r);
    fit.maxResidual = 0.0;
    for (const auto& p : points)
        fit.maxResidual = std::max(fit.maxResidual, std::abs(std::abs(p - fit.center) - fit.radius));
    return fit;
}

Shape classifyShape(std::span<const Complex> points, double tolRel)
{
    if (points.size() < 10)
        throw GeometryError("shape classification needs at least 10 points");
    if (!(tolRel > 0.0 && tolRel < 0.1))
        throw GeometryError("tolRel must lie in (0, 0.1)");

    const double diameter = convexHull(points).diameter();

    // Total-least-squares line through the centroid.
    Complex mean{};
    for (const auto& p : points)
        mean += p;
    mean /= static_cast<double>(points.size());
    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
    for (const auto& p : points) {
        const Eigen::Vector2d q(p.real() - mean.real(), p.imag() - mean.imag());
        cov += q * q.transpose();
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(cov);
    const Eigen::Vector2d major = eig.eigenvectors().col(1);
    const Complex direction{major(0), major(1)};
    const Complex normal{-direction.imag(), direction.real()};

    double lineResidual = 0.0;
    double tmin = std::numeric_limits<double>::infinity();
    double tmax = -tmin;
    for (const auto& p : points) {
        lineResidual = std::max(lineResidual, std::abs(dot(p - mean, normal)));
        const double t = dot(p - mean, direction);
        tmin = std::min(tmin, t);
        tmax = std::max(tmax, t);
    }
    if (lineResidual <= tolRel * diameter)
        return SegmentShape{mean + tmin * direction, mean + tmax * direction, lineResidual};

    const CircleFit fit = fitCircle(points);
    if (fit.maxResidual <= tolRel * fit.radius)
        return CircleShape{fit.center, fit.radius, fit.maxResidual};
    return GenericShape{lineResidual, fit.maxResidual};
}

} // namespace juliahull
