// juliahull: check, classify and render convex hulls of polynomial Julia sets.

#include "juliahull/report.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace juliahull;

namespace {

struct Options {
    std::string poly;
    std::string out;
    std::string format = "json";
    std::vector<std::string> checks;
    std::string rasterOut;
    CheckConfig cfg;
};

void addCommon(CLI::App* sub, Options& o)
{
    sub->add_option("--poly", o.poly, "ascending coefficients or preset (cheb:d, negcheb:d, monomial:c,d, quad:c)")
        ->required();
    sub->add_option("--n", o.cfg.juliaSamples, "Julia samples");
    sub->add_option("--m", o.cfg.boundarySamples, "hull boundary samples");
    sub->add_option("--k", o.cfg.interiorSamples, "hull interior samples");
    sub->add_option("--tol", o.cfg.tolRel, "tolerance relative to hull diameter");
    sub->add_option("--seed", o.cfg.seed, "random seed");
    sub->add_option("--res", o.cfg.gridResolution, "escape grid resolution");
    sub->add_option("--max-iter", o.cfg.maxIter, "escape iterations");
    sub->add_option("--out", o.out, "output path (default stdout)");
}

void addFormat(CLI::App* sub, Options& o)
{
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}));
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f)
        throw UsageError("write to '" + path + "' failed");
}

std::string formatResult(const SuiteResult& r, const std::string& format)
{
    return format == "csv" ? suiteCsv(r) : suiteJson(r);
}

int runReport(const Options& o, std::vector<CheckName> checks, bool classify)
{
    const PolySpec spec = parsePolynomial(o.poly);
    const SuiteResult r = runChecks(spec, o.cfg, checks, classify);
    emit(formatResult(r, o.format), o.out);
    if (!r.classificationError.empty())
        std::cerr << "juliahull: classification inconclusive: " << r.classificationError << '\n';
    for (const auto& rep : r.reports)
        if (!rep.diagnostic.empty())
            std::cerr << "juliahull: " << rep.check << ": " << rep.diagnostic << '\n';
    return r.exitCode();
}

int runRender(const Options& o)
{
    const PolySpec spec = parsePolynomial(o.poly);
    EscapeGrid grid;
    const std::string svg = renderScene(spec, o.cfg, {}, o.rasterOut.empty() ? nullptr : &grid);
    emit(svg, o.out);
    if (!o.rasterOut.empty()) {
        std::ostringstream pgm;
        writePgm(pgm, grid, coefficientString(spec.poly));
        emit(pgm.str(), o.rasterOut);
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Convex hulls of polynomial Julia sets"};
    app.require_subcommand(1);

    Options o;
    auto* check = app.add_subcommand("check", "run selected checks");
    addCommon(check, o);
    addFormat(check, o);
    check->add_option("--check", o.checks, "backward, critical, filled, cb, thurston (repeatable; default all)");

    auto* classify = app.add_subcommand("classify", "classify the equality case");
    addCommon(classify, o);
    addFormat(classify, o);

    auto* render = app.add_subcommand("render", "write an SVG scene");
    addCommon(render, o);
    render->add_option("--raster-out", o.rasterOut, "PGM (P5) sidecar of the escape grid");

    auto* suite = app.add_subcommand("suite", "all checks plus classification");
    addCommon(suite, o);
    addFormat(suite, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (check->parsed()) {
            std::vector<CheckName> names;
            for (const auto& s : o.checks)
                names.push_back(checkNameFromString(s));
            if (names.empty())
                names.assign(std::begin(kAllChecks), std::end(kAllChecks));
            return runReport(o, names, false);
        }
        if (classify->parsed())
            return runReport(o, {}, true);
        if (render->parsed())
            return runRender(o);
        return runReport(o, {std::begin(kAllChecks), std::end(kAllChecks)}, true);
    } catch (const ParseError& e) {
        std::cerr << "juliahull: bad --poly: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "juliahull: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "juliahull: " << e.what() << '\n';
        return kExitFail;
    }
}
