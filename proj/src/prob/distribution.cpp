#include "softnum/distribution.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "softnum/error.hpp"
#include "softnum/text.hpp"

namespace softnum::prob {

namespace {

void requireParam(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InvalidParameter, what);
}

void requireQuery(double x) {
    if (std::isnan(x)) throw Error(ErrorCode::DomainError, "distribution queried at NaN");
}

}  // namespace

double standardNormalCdf(double z) noexcept { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

Distribution Distribution::uniform(double lo, double hi) {
    requireParam(std::isfinite(lo) && std::isfinite(hi) && hi > lo, "uniform requires finite lo < hi");
    return {DistributionKind::Uniform, lo, hi};
}

Distribution Distribution::exponential(double rate) {
    requireParam(std::isfinite(rate) && rate > 0.0, "exponential requires a finite rate > 0");
    return {DistributionKind::Exponential, rate, 0.0};
}

Distribution Distribution::normal(double mean, double stddev) {
    requireParam(std::isfinite(mean) && std::isfinite(stddev) && stddev > 0.0,
                 "normal requires a finite mean and stddev > 0");
    return {DistributionKind::Normal, mean, stddev};
}

double Distribution::cdf(double x) const {
    requireQuery(x);
    switch (kind_) {
        case DistributionKind::Uniform:
            if (x <= p1_) return 0.0;
            if (x >= p2_) return 1.0;
            return (x - p1_) / (p2_ - p1_);
        case DistributionKind::Exponential:
            if (x <= 0.0) return 0.0;
            return -std::expm1(-p1_ * x);
        case DistributionKind::Normal:
            return standardNormalCdf((x - p1_) / p2_);
    }
    return 0.0;
}

double Distribution::pdf(double x) const {
    requireQuery(x);
    switch (kind_) {
        case DistributionKind::Uniform:
            return (x < p1_ || x > p2_) ? 0.0 : 1.0 / (p2_ - p1_);
        case DistributionKind::Exponential:
            if (x < 0.0 || std::isinf(x)) return 0.0;
            return p1_ * std::exp(-p1_ * x);
        case DistributionKind::Normal: {
            if (std::isinf(x)) return 0.0;
            const double z = (x - p1_) / p2_;
            return std::exp(-0.5 * z * z) / (p2_ * std::sqrt(2.0 * std::numbers::pi));
        }
    }
    return 0.0;
}

Interval Distribution::support() const noexcept {
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (kind_) {
        case DistributionKind::Uniform: return {p1_, p2_};
        case DistributionKind::Exponential: return {0.0, inf};
        case DistributionKind::Normal: return {-inf, inf};
    }
    return {-inf, inf};
}

Interval Distribution::effectiveSupport() const noexcept {
    switch (kind_) {
        case DistributionKind::Uniform: return {p1_, p2_};
        case DistributionKind::Exponential: return {0.0, 40.0 / p1_};
        case DistributionKind::Normal: return {p1_ - 8.0 * p2_, p1_ + 8.0 * p2_};
    }
    return {0.0, 0.0};
}

double Distribution::scale() const noexcept {
    switch (kind_) {
        case DistributionKind::Uniform: return p2_ - p1_;
        case DistributionKind::Exponential: return 1.0 / p1_;
        case DistributionKind::Normal: return p2_;
    }
    return 1.0;
}

std::string Distribution::describe() const {
    switch (kind_) {
        case DistributionKind::Uniform:
            return "uniform(" + formatReal(p1_, kRoundTripDigits) + "," + formatReal(p2_, kRoundTripDigits) + ")";
        case DistributionKind::Exponential:
            return "exp(" + formatReal(p1_, kRoundTripDigits) + ")";
        case DistributionKind::Normal:
            return "normal(" + formatReal(p1_, kRoundTripDigits) + "," + formatReal(p2_, kRoundTripDigits) + ")";
    }
    return "?";
}

Distribution Distribution::parse(std::string_view literal) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < literal.size() && std::isspace(static_cast<unsigned char>(literal[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= literal.size() || literal[pos] != c) {
            throw ParseError(pos, std::string("expected '") + c + "' in distribution literal");
        }
        ++pos;
    };
    auto number = [&] {
        skip();
        const std::size_t start = pos;
        if (pos < literal.size() && literal[pos] == '+') ++pos;
        double value = 0.0;
        auto [end, ec] = std::from_chars(literal.data() + pos, literal.data() + literal.size(), value);
        if (ec != std::errc{} || !std::isfinite(value)) throw ParseError(start, "malformed distribution parameter");
        pos = static_cast<std::size_t>(end - literal.data());
        return value;
    };

    skip();
    const std::size_t nameStart = pos;
    while (pos < literal.size() && std::isalpha(static_cast<unsigned char>(literal[pos]))) ++pos;
    const std::string_view name = literal.substr(nameStart, pos - nameStart);

    expect('(');
    std::vector<double> params{number()};
    skip();
    while (pos < literal.size() && literal[pos] == ',') {
        ++pos;
        params.push_back(number());
        skip();
    }
    expect(')');
    skip();
    if (pos != literal.size()) throw ParseError(pos, "unexpected trailing input in distribution literal");

    auto arity = [&](std::size_t n) {
        if (params.size() != n) {
            throw ParseError(nameStart, std::string(name) + " takes " + std::to_string(n) + " parameter(s)");
        }
    };
    if (name == "uniform") {
        arity(2);
        return uniform(params[0], params[1]);
    }
    if (name == "exp") {
        arity(1);
        return exponential(params[0]);
    }
    if (name == "normal") {
        arity(2);
        return normal(params[0], params[1]);
    }
    throw ParseError(nameStart, "unknown distribution '" + std::string(name) + "'");
}

}  // namespace softnum::prob
