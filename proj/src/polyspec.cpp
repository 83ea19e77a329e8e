#include "juliahull/report.h"

#include <charconv>
#include <cctype>

namespace juliahull {

namespace {

bool isDigit(char c) { return c >= '0' && c <= '9'; }

// Scans digits [. digits] [e [sign] digits] from pos; returns the value.
double parseDecimal(std::string_view text, std::size_t& pos, std::size_t offset)
{
    const std::size_t begin = pos;
    std::size_t mantissaDigits = 0;
    while (pos < text.size() && isDigit(text[pos])) {
        ++pos;
        ++mantissaDigits;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && isDigit(text[pos])) {
            ++pos;
            ++mantissaDigits;
        }
    }
    if (mantissaDigits == 0)
        throw ParseError("expected a decimal number", offset + begin + 1);
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        std::size_t q = pos + 1;
        if (q < text.size() && (text[q] == '+' || text[q] == '-'))
            ++q;
        if (q >= text.size() || !isDigit(text[q]))
            throw ParseError("malformed exponent", offset + q + 1);
        while (q < text.size() && isDigit(text[q]))
            ++q;
        pos = q;
    }
    double value = 0.0;
    const auto res = std::from_chars(text.data() + begin, text.data() + pos, value);
    if (res.ec != std::errc() || res.ptr != text.data() + pos)
        throw ParseError("number out of range", offset + begin + 1);
    return value;
}

int parseDegree(std::string_view text, std::size_t offset)
{
    int d = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), d);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ParseError("expected an integer degree", offset + 1);
    if (d < 1)
        throw ParseError("degree must be >= 1", offset + 1);
    return d;
}

// Splits on ',' keeping the 0-based offset of every piece.
std::vector<std::pair<std::string_view, std::size_t>> splitCommas(std::string_view text, std::size_t offset)
{
    std::vector<std::pair<std::string_view, std::size_t>> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            parts.emplace_back(text.substr(start, i - start), offset + start);
            start = i + 1;
        }
    }
    return parts;
}

Polynomial checkedPolynomial(std::vector<Complex> coeffs, std::size_t column)
{
    try {
        return Polynomial(std::move(coeffs));
    } catch (const PolynomialError& e) {
        throw ParseError(e.what(), column);
    }
}

} // namespace

Complex parseComplexLiteral(std::string_view text, std::size_t offset)
{
    if (text.empty())
        throw ParseError("empty coefficient", offset + 1);
    std::size_t pos = 0;
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1.0 : 1.0;
        ++pos;
    }
    const double re = sign * parseDecimal(text, pos, offset);
    double im = 0.0;
    if (pos < text.size()) {
        if (text[pos] != '+' && text[pos] != '-')
            throw ParseError(std::string("unexpected character '") + text[pos] + "'", offset + pos + 1);
        const double imSign = text[pos] == '-' ? -1.0 : 1.0;
        ++pos;
        im = imSign * parseDecimal(text, pos, offset);
        if (pos >= text.size() || text[pos] != 'i')
            throw ParseError("expected 'i' after the imaginary part", offset + pos + 1);
        ++pos;
        if (pos != text.size())
            throw ParseError("trailing characters after complex literal", offset + pos + 1);
    }
    return {re, im};
}

PolySpec parsePolynomial(std::string_view text)
{
    if (text.empty())
        throw ParseError("empty polynomial", 1);

    const std::size_t colon = text.find(':');
    if (colon != std::string_view::npos) {
        const std::string_view name = text.substr(0, colon);
        const std::string_view args = text.substr(colon + 1);
        const std::size_t argOffset = colon + 1;
        PolySpec spec{std::string(text), Polynomial({1.0}), std::string(name)};
        if (name == "cheb" || name == "negcheb") {
            const int d = parseDegree(args, argOffset);
            Polynomial t = chebyshev(d);
            if (name == "negcheb") {
                std::vector<Complex> c(t.coeffs().begin(), t.coeffs().end());
                for (auto& x : c)
                    x = Complex{} - x;
                t = Polynomial(std::move(c));
            }
            spec.poly = std::move(t);
        } else if (name == "monomial") {
            const auto parts = splitCommas(args, argOffset);
            if (parts.size() != 2)
                throw ParseError("monomial preset takes c,d", argOffset + 1);
            const Complex c = parseComplexLiteral(parts[0].first, parts[0].second);
            const int d = parseDegree(parts[1].first, parts[1].second);
            spec.poly = checkedPolynomial([&] {
                std::vector<Complex> coeffs(static_cast<std::size_t>(d) + 1, Complex{});
                coeffs.back() = c;
                return coeffs;
            }(), parts[0].second + 1);
        } else if (name == "quad") {
            const Complex c = parseComplexLiteral(args, argOffset);
            spec.poly = Polynomial({c, 0.0, 1.0});
        } else {
            throw ParseError("unknown preset '" + std::string(name) + "'", 1);
        }
        return spec;
    }

    std::vector<Complex> coeffs;
    std::size_t lastColumn = 1;
    for (const auto& [piece, off] : splitCommas(text, 0)) {
        coeffs.push_back(parseComplexLiteral(piece, off));
        lastColumn = off + 1;
    }
    return PolySpec{std::string(text), checkedPolynomial(std::move(coeffs), lastColumn), std::nullopt};
}

} // namespace juliahull
