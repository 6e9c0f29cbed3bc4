#include "softnum/analytic.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "softnum/error.hpp"

namespace softnum {

std::string_view AnalyticFunction::name() const noexcept {
    switch (kind) {
        case AnalyticKind::Exp: return "exp";
        case AnalyticKind::Ln: return "ln";
        case AnalyticKind::Sin: return "sin";
        case AnalyticKind::Cos: return "cos";
        case AnalyticKind::Tan: return "tan";
        case AnalyticKind::Sqrt: return "sqrt";
        case AnalyticKind::Recip: return "recip";
        case AnalyticKind::PowReal: return "pow";
    }
    return "?";
}

bool AnalyticFunction::inDomain(double x) const noexcept {
    if (!std::isfinite(x)) return false;
    switch (kind) {
        case AnalyticKind::Ln:
        case AnalyticKind::Sqrt:
        case AnalyticKind::PowReal: return x > 0.0;
        case AnalyticKind::Recip: return x != 0.0;
        case AnalyticKind::Tan: return std::abs(std::cos(x)) >= kTanPoleTolerance;
        default: return true;
    }
}

double AnalyticFunction::value(double x) const {
    switch (kind) {
        case AnalyticKind::Exp: return std::exp(x);
        case AnalyticKind::Ln: return std::log(x);
        case AnalyticKind::Sin: return std::sin(x);
        case AnalyticKind::Cos: return std::cos(x);
        case AnalyticKind::Tan: return std::tan(x);
        case AnalyticKind::Sqrt: return std::sqrt(x);
        case AnalyticKind::Recip: return 1.0 / x;
        case AnalyticKind::PowReal: return std::pow(x, exponent);
    }
    return std::nan("");
}

double AnalyticFunction::derivative(double x) const {
    switch (kind) {
        case AnalyticKind::Exp: return std::exp(x);
        case AnalyticKind::Ln: return 1.0 / x;
        case AnalyticKind::Sin: return std::cos(x);
        case AnalyticKind::Cos: return -std::sin(x);
        case AnalyticKind::Tan: {
            const double c = std::cos(x);
            return 1.0 / (c * c);
        }
        case AnalyticKind::Sqrt: return 0.5 / std::sqrt(x);
        case AnalyticKind::Recip: return -1.0 / (x * x);
        case AnalyticKind::PowReal: return exponent * std::pow(x, exponent - 1.0);
    }
    return std::nan("");
}

SoftNumber liftAnalytic(const AnalyticFunction& f, const SoftNumber& p) {
    const double x = p.real();
    if (f.kind == AnalyticKind::PowReal && !std::isfinite(f.exponent)) {
        throw Error(ErrorCode::InvalidParameter, "pow exponent must be finite");
    }
    if (!f.inDomain(x)) {
        if (f.kind == AnalyticKind::Tan) {
            throw Error(ErrorCode::PoleError, "tan evaluated at a pole, x = " + std::to_string(x));
        }
        throw Error(ErrorCode::DomainError,
                    std::string(f.name()) + " is undefined at x = " + std::to_string(x));
    }
    const double value = f.value(x);
    const double soft = p.soft() == 0.0 ? 0.0 : p.soft() * f.derivative(x);
    if (!std::isfinite(value) || !std::isfinite(soft)) {
        throw Error(ErrorCode::ArithmeticOverflow, std::string(f.name()) + " left the finite range");
    }
    return SoftNumber{soft, value};
}

std::optional<AnalyticFunction> analyticByName(std::string_view name) noexcept {
    static constexpr std::array<std::pair<std::string_view, AnalyticKind>, 7> kNamed{{
        {"exp", AnalyticKind::Exp},
        {"ln", AnalyticKind::Ln},
        {"sin", AnalyticKind::Sin},
        {"cos", AnalyticKind::Cos},
        {"tan", AnalyticKind::Tan},
        {"sqrt", AnalyticKind::Sqrt},
        {"recip", AnalyticKind::Recip},
    }};
    for (const auto& [key, kind] : kNamed) {
        if (key == name) return AnalyticFunction{kind};
    }
    return std::nullopt;
}

}  // namespace softnum
