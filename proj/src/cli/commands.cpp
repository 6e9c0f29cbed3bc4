#include "softnum/commands.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "softnum/error.hpp"
#include "softnum/expression.hpp"
#include "softnum/text.hpp"

namespace softnum::cli {

std::string cmdEval(std::string_view expression) { return toString(evaluate(expression)); }

namespace {

class QueryScanner {
public:
    explicit QueryScanner(std::string_view text) : text_(text) {}

    void blanks() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view token) {
        blanks();
        if (text_.substr(pos_, token.size()) != token) return false;
        pos_ += token.size();
        return true;
    }

    void expect(std::string_view token) {
        if (!accept(token)) throw ParseError(pos_, "expected '" + std::string(token) + "'");
    }

    double number() {
        blanks();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '+') ++pos_;
        double value = 0.0;
        auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{} || std::isnan(value)) throw ParseError(start, "expected a number");
        pos_ = static_cast<std::size_t>(end - text_.data());
        return value;
    }

    void end() {
        blanks();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input in query");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ProbQuery parseQuery(std::string_view query) {
    QueryScanner scan(query);
    ProbQuery q;
    if (scan.accept("<=")) {
        q.kind = QueryKind::Leq;
        q.x = scan.number();
    } else if (scan.accept("<")) {
        q.kind = QueryKind::Lt;
        q.x = scan.number();
    } else if (scan.accept("=")) {
        q.kind = QueryKind::Eq;
        q.x = scan.number();
    } else if (scan.accept("in")) {
        q.kind = QueryKind::Interval;
        scan.expect("(");
        q.lo = scan.number();
        scan.expect(",");
        q.x = scan.number();
        scan.expect("]");
    } else {
        throw ParseError(0, "query must start with '<=', '<', '=' or 'in'");
    }
    scan.end();
    return q;
}

prob::SoftProbability answer(const prob::Distribution& d, const ProbQuery& query) {
    switch (query.kind) {
        case QueryKind::Leq: return prob::psLeq(d, query.x);
        case QueryKind::Lt: return prob::psLt(d, query.x);
        case QueryKind::Eq: return prob::psEq(d, query.x);
        case QueryKind::Interval: return prob::psInterval(d, query.lo, query.x);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown query kind");
}

std::string cmdProb(std::string_view distribution, std::string_view query) {
    const auto d = prob::Distribution::parse(distribution);
    const auto ps = answer(d, parseQuery(query));
    std::string out = toString(ps.value());
    out += "\n{\"soft\":" + formatReal(ps.density(), kRoundTripDigits) +
           ",\"real\":" + formatReal(ps.probability(), kRoundTripDigits) + "}\n";
    return out;
}

geometry::Resolution parseResolution(std::string_view text) {
    const auto cross = text.find('x');
    if (cross == std::string_view::npos) throw ParseError(0, "resolution must look like NxM");
    auto part = [&](std::string_view digits, std::size_t offset) {
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) {
            throw ParseError(offset, "resolution components must be integers");
        }
        return value;
    };
    return geometry::Resolution{part(text.substr(0, cross), 0), part(text.substr(cross + 1), cross + 1)};
}

void CliConfig::validate() const {
    if (!std::isfinite(R) || !(R > 1.0)) throw Error(ErrorCode::InvalidParameter, "--R must be greater than 1");
    if (resolution.nPhi < 2 || resolution.nB < 2) {
        throw Error(ErrorCode::InvalidParameter, "--res components must be at least 2");
    }
    if (tolerance && !(*tolerance > 0.0)) throw Error(ErrorCode::InvalidParameter, "tolerance must be positive");
}

std::filesystem::path CliConfig::resolvedOutputPath() const {
    if (!outputPath.empty()) return outputPath;
    return "soft_" + std::string(geometry::toString(surface)) + "." + std::string(io::toString(format));
}

io::MeshFileManifest cmdMesh(const CliConfig& config) {
    config.validate();
    const auto mesh = geometry::generateMesh(config.surface, config.R, config.resolution);
    return io::exportMesh(mesh, config.format, config.resolvedOutputPath());
}

std::optional<double> toleranceFromEnvironment() {
    const char* raw = std::getenv("SOFTNUM_TOLERANCE");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    const std::string_view text(raw);
    double value = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value) || !(value > 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "SOFTNUM_TOLERANCE must be a positive number");
    }
    return value;
}

}  // namespace softnum::cli
