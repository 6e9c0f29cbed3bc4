#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "softnum/soft_number.hpp"

namespace softnum {

enum class AnalyticKind { Exp, Ln, Sin, Cos, Tan, Sqrt, Recip, PowReal };

/// A member of the supported analytic roster. PowReal carries its exponent.
struct AnalyticFunction {
    AnalyticKind kind = AnalyticKind::Exp;
    double exponent = 1.0;

    static AnalyticFunction exp() { return {AnalyticKind::Exp}; }
    static AnalyticFunction ln() { return {AnalyticKind::Ln}; }
    static AnalyticFunction sin() { return {AnalyticKind::Sin}; }
    static AnalyticFunction cos() { return {AnalyticKind::Cos}; }
    static AnalyticFunction tan() { return {AnalyticKind::Tan}; }
    static AnalyticFunction sqrt() { return {AnalyticKind::Sqrt}; }
    static AnalyticFunction recip() { return {AnalyticKind::Recip}; }
    static AnalyticFunction powReal(double r) { return {AnalyticKind::PowReal, r}; }

    std::string_view name() const noexcept;

    /// True when x lies strictly inside the function's domain.
    bool inDomain(double x) const noexcept;

    double value(double x) const;
    double derivative(double x) const;
};

/// tan(x) is rejected with ErrorCode::PoleError once |cos x| falls below this.
inline constexpr double kTanPoleTolerance = 1e-10;

/// f(α0̄ ∔ x) = α·f′(x)0̄ ∔ f(x).
/// Throws ErrorCode::DomainError outside the domain (ln, sqrt, powReal need
/// x > 0; recip needs x ≠ 0) and ErrorCode::PoleError near a pole of tan.
SoftNumber liftAnalytic(const AnalyticFunction& f, const SoftNumber& p);

/// Looks up exp, ln, sin, cos, tan, sqrt and recip by name.
std::optional<AnalyticFunction> analyticByName(std::string_view name) noexcept;

}  // namespace softnum
