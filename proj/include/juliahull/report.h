#pragma once

#include "juliahull/checks.h"
#include "juliahull/polynomial.h"

#include <json.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace juliahull {

/// Malformed polynomial text. column() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t column)
        : std::runtime_error(what + " at column " + std::to_string(column)), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Bad command-line usage (exit status 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PolySpec {
    std::string source;
    Polynomial poly;
    std::optional<std::string> preset; // "cheb", "negcheb", "monomial", "quad"
};

/**
 * Accepts comma-separated ascending coefficients ("-1,0,2" is 2z^2 - 1) or
 * one of the presets cheb:d, negcheb:d, monomial:c,d, quad:c. A complex
 * literal is an optional sign, a decimal, and an optional signed decimal
 * followed by 'i', with no spaces: "0.25", "-1+0.5i", "1e-3-2i".
 */
PolySpec parsePolynomial(std::string_view text);

/// Parses one complex literal; offset is added to reported columns.
Complex parseComplexLiteral(std::string_view text, std::size_t offset = 0);

// Exit statuses shared by the CLI and tests.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

enum class CheckName { Backward, Critical, Filled, CBConvexity, Thurston };
const char* toString(CheckName c);
/// Accepts "backward", "critical", "filled", "cb", "thurston".
CheckName checkNameFromString(std::string_view s);
inline constexpr CheckName kAllChecks[] = {CheckName::Backward, CheckName::Critical, CheckName::Filled,
                                           CheckName::CBConvexity, CheckName::Thurston};

struct SuiteResult {
    std::string polynomial;
    CheckConfig config;
    std::vector<CheckReport> reports;
    std::optional<Classification> classification;
    bool classificationRequested = false;
    std::string classificationError; // set when classification was Inconclusive

    int exitCode() const;
};

/// Runs the selected checks (and optionally the classifier) on one shared
/// Julia sample. Throws UsageError when the degree is below 2.
SuiteResult runChecks(const PolySpec& spec, const CheckConfig& cfg, std::span<const CheckName> checks,
                      bool classify);

/// Same, on an already sampled Julia hull.
SuiteResult runChecks(const JuliaHull& ctx, std::span<const CheckName> checks, bool classify);

/// All five checks plus the equality classifier.
SuiteResult runSuite(const PolySpec& spec, const CheckConfig& cfg);

nlohmann::json toJson(const CheckConfig& cfg);
nlohmann::json toJson(const CheckReport& report);
nlohmann::json toJson(const Classification& c);

/// JSON array: one object per check report, then the classification.
std::string suiteJson(const SuiteResult& result);
/// One CSV row per check report, then one for the classification.
std::string suiteCsv(const SuiteResult& result);

struct SceneOptions {
    std::size_t maxCloudMarks = 4000;
    std::size_t preimageTargets = 128;
    int pixels = 800;
};

/// Deterministic SVG: K_p raster underlay as row runs, Julia cloud, hull
/// path, preimages of hull boundary samples, critical points and a legend.
/// When rasterOut is given the escape grid is also returned for a PGM sidecar.
std::string renderScene(const PolySpec& spec, const CheckConfig& cfg, const SceneOptions& options = {},
                        EscapeGrid* rasterOut = nullptr);

} // namespace juliahull
