#pragma once

#include <functional>
#include <string>
#include <vector>

#include "softnum/distribution.hpp"
#include "softnum/soft_number.hpp"

namespace softnum::prob {

/// A soft number whose real part is a probability in [0, 1] and whose soft
/// part is a non-negative density value.
class SoftProbability {
public:
    /// Throws ErrorCode::OutOfRange when the invariants do not hold.
    explicit SoftProbability(SoftNumber value);

    const SoftNumber& value() const noexcept { return value_; }
    double density() const noexcept { return value_.soft(); }
    double probability() const noexcept { return value_.real(); }

    friend bool operator==(const SoftProbability&, const SoftProbability&) noexcept = default;

private:
    SoftNumber value_;
};

/// Ps(X ≤ x) = f(x)·0̄ ∔ F(x)
SoftProbability psLeq(const Distribution& d, double x);
/// Ps(X = x) = f(x)·0̄ ∔ 0
SoftProbability psEq(const Distribution& d, double x);
/// Ps(X < x) = 0·0̄ ∔ F(x)
SoftProbability psLt(const Distribution& d, double x);

/// Ps(a < X ≤ b) = f(b)·0̄ ∔ (F(b) − F(a)). Infinite endpoints are allowed.
/// Throws ErrorCode::InvertedInterval when a > b.
SoftProbability psInterval(const Distribution& d, double a, double b);

/// CDF/PDF pair under validation. Built from a Distribution, or by hand to
/// exercise the validator with a faulty density.
struct DensityModel {
    std::function<double(double)> cdf;
    std::function<double(double)> pdf;
    Interval support;
    Interval effectiveSupport;
    double scale = 1.0;
};

DensityModel modelOf(const Distribution& d);

struct ValidationOptions {
    std::size_t gridPoints = 1001;
    /// |pdf − dF/dx| ≤ derivativeTolerance · max(1, pdf)
    double derivativeTolerance = 1e-6;
    double limitTolerance = 1e-9;
    /// Finite-difference step as a fraction of the model's scale.
    double relativeStep = 1e-5;
};

struct ValidationReport {
    bool derivativeOk = false;
    bool monotoneOk = false;
    bool limitsOk = false;

    /// Largest tolerance-normalised derivative mismatch and where it occurred.
    double maxDerivativeError = 0.0;
    double maxDerivativeErrorAt = 0.0;
    double lowerLimit = 0.0;
    double upperLimit = 0.0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return derivativeOk && monotoneOk && limitsOk; }
};

/// Checks the pdf against a finite-difference derivative of the cdf on a grid
/// over the effective support, cdf monotonicity on that grid and the cdf
/// limits at the grid ends. Grid points whose stencil would leave the support
/// use a second-order one-sided difference pointing inward.
ValidationReport validateModel(const DensityModel& model, const ValidationOptions& options = {});
ValidationReport validateDistribution(const Distribution& d, const ValidationOptions& options = {});

}  // namespace softnum::prob
