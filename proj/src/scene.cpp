#include "juliahull/report.h"

#include "juliahull/roots.h"

#include <cstdio>
#include <sstream>

namespace juliahull {

namespace {

// World square [-half, half]^2 mapped onto [0, pixels]^2 with +imag up.
class Viewport {
public:
    Viewport(double half, int pixels) : half_(half), pixels_(pixels) {}

    double x(Complex z) const { return (z.real() + half_) / (2.0 * half_) * pixels_; }
    double y(Complex z) const { return (half_ - z.imag()) / (2.0 * half_) * pixels_; }
    double length(double world) const { return world / (2.0 * half_) * pixels_; }

private:
    double half_;
    int pixels_;
};

std::string fixed(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escapeXml(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

void rasterLayer(std::ostringstream& os, const EscapeGrid& grid, const Viewport& vp)
{
    os << "<g id=\"filled-julia\" fill=\"#d9d9d9\" stroke=\"none\">\n";
    const double cell = vp.length(grid.cellSize);
    for (int y = 0; y < grid.height; ++y) {
        int x = 0;
        while (x < grid.width) {
            if (!grid.at(x, y)) {
                ++x;
                continue;
            }
            const int start = x;
            while (x < grid.width && grid.at(x, y))
                ++x;
            const Complex topLeft{grid.originReal + start * grid.cellSize, grid.originImag + (y + 1) * grid.cellSize};
            os << "<rect x=\"" << fixed(vp.x(topLeft)) << "\" y=\"" << fixed(vp.y(topLeft)) << "\" width=\""
               << fixed(cell * (x - start)) << "\" height=\"" << fixed(cell) << "\"/>\n";
        }
    }
    os << "</g>\n";
}

void hullLayer(std::ostringstream& os, const ConvexPolygon& hull, const Viewport& vp)
{
    const auto v = hull.vertices();
    os << "<path id=\"hull\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" d=\"M "
       << fixed(vp.x(v[0])) << ' ' << fixed(vp.y(v[0]));
    if (v.size() == 1) {
        // Zero-length segment so a lone point still draws.
        os << " L " << fixed(vp.x(v[0])) << ' ' << fixed(vp.y(v[0]));
    }
    for (std::size_t i = 1; i < v.size(); ++i)
        os << " L " << fixed(vp.x(v[i])) << ' ' << fixed(vp.y(v[i]));
    if (hull.kind() == HullKind::Proper)
        os << " Z";
    os << "\"/>\n";
}

} // namespace

std::string renderScene(const PolySpec& spec, const CheckConfig& cfg, const SceneOptions& options,
                        EscapeGrid* rasterOut)
{
    if (spec.poly.degree() < 2)
        throw UsageError("render needs a polynomial of degree >= 2");
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const JuliaHull ctx = buildJuliaHull(spec.poly, cfg);
    const SuiteResult suite = runChecks(ctx, kAllChecks, true);
    const EscapeGrid grid = escapeGrid(spec.poly, cfg.gridResolution, cfg.maxIter);
    if (rasterOut)
        *rasterOut = grid;

    const double half = grid.radius * (1.0 + kGridMargin);
    const Viewport vp(half, options.pixels);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.pixels << "\" height=\"" << options.pixels
       << "\" viewBox=\"0 0 " << options.pixels << ' ' << options.pixels << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    rasterLayer(os, grid, vp);

    os << "<g id=\"julia-cloud\" fill=\"#1f3a93\">\n";
    const auto& pts = ctx.cloud.points;
    const std::size_t stride = std::max<std::size_t>(1, (pts.size() + options.maxCloudMarks - 1) / options.maxCloudMarks);
    for (std::size_t i = 0; i < pts.size(); i += stride)
        os << "<circle cx=\"" << fixed(vp.x(pts[i])) << "\" cy=\"" << fixed(vp.y(pts[i])) << "\" r=\"0.8\"/>\n";
    os << "</g>\n";

    hullLayer(os, ctx.hull, vp);

    os << "<g id=\"preimages\" fill=\"#27ae60\">\n";
    for (const auto& w : boundarySamples(ctx.hull, options.preimageTargets)) {
        for (const auto& z : preimages(spec.poly, w, cfg.residualTol).roots)
            os << "<rect class=\"preimage\" x=\"" << fixed(vp.x(z) - 1.5) << "\" y=\"" << fixed(vp.y(z) - 1.5)
               << "\" width=\"3\" height=\"3\"/>\n";
    }
    os << "</g>\n";

    os << "<g id=\"critical-points\" fill=\"#e67e22\" stroke=\"#000000\" stroke-width=\"0.5\">\n";
    for (const auto& c : criticalPoints(spec.poly, cfg.residualTol).roots)
        os << "<circle class=\"critical\" cx=\"" << fixed(vp.x(c)) << "\" cy=\"" << fixed(vp.y(c))
           << "\" r=\"4\"/>\n";
    os << "</g>\n";

    os << "<g id=\"legend\" font-family=\"monospace\" font-size=\"12\" fill=\"#000000\">\n";
    int line = 0;
    auto legend = [&](const std::string& text) {
        os << "<text x=\"10\" y=\"" << 18 + 15 * line++ << "\">" << escapeXml(text) << "</text>\n";
    };
    legend("p(z) = " + prettyString(spec.poly));
    legend("coefficients: " + coefficientString(spec.poly));
    for (const auto& r : suite.reports)
        legend(r.check + ": " + toString(r.verdict));
    if (suite.classification)
        legend(std::string("classifyEquality: ") + toString(suite.classification->kind));
    else
        legend("classifyEquality: Inconclusive");
    os << "</g>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace juliahull
