#include "softnum/soft_probability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "softnum/error.hpp"
#include "softnum/text.hpp"

namespace softnum::prob {

SoftProbability::SoftProbability(SoftNumber value) : value_(value) {
    if (value.real() < 0.0 || value.real() > 1.0) {
        throw Error(ErrorCode::OutOfRange, "soft probability real part must lie in [0, 1]");
    }
    if (value.soft() < 0.0) {
        throw Error(ErrorCode::OutOfRange, "soft probability soft part must be non-negative");
    }
}

SoftProbability psLeq(const Distribution& d, double x) {
    return SoftProbability{SoftNumber{d.pdf(x), d.cdf(x)}};
}

SoftProbability psEq(const Distribution& d, double x) {
    return SoftProbability{SoftNumber{d.pdf(x), 0.0}};
}

SoftProbability psLt(const Distribution& d, double x) {
    return SoftProbability{SoftNumber{0.0, d.cdf(x)}};
}

SoftProbability psInterval(const Distribution& d, double a, double b) {
    if (std::isnan(a) || std::isnan(b)) throw Error(ErrorCode::DomainError, "interval endpoint is NaN");
    if (a > b) throw Error(ErrorCode::InvertedInterval, "interval lower end exceeds upper end");
    const double mass = std::clamp(d.cdf(b) - d.cdf(a), 0.0, 1.0);
    return SoftProbability{SoftNumber{d.pdf(b), mass}};
}

DensityModel modelOf(const Distribution& d) {
    return DensityModel{
        [d](double x) { return d.cdf(x); },
        [d](double x) { return d.pdf(x); },
        d.support(),
        d.effectiveSupport(),
        d.scale(),
    };
}

namespace {

double derivativeAt(const DensityModel& model, double x, double h) {
    const auto& F = model.cdf;
    if (x - h < model.support.lo) {
        return (-3.0 * F(x) + 4.0 * F(x + h) - F(x + 2.0 * h)) / (2.0 * h);
    }
    if (x + h > model.support.hi) {
        return (3.0 * F(x) - 4.0 * F(x - h) + F(x - 2.0 * h)) / (2.0 * h);
    }
    return (F(x + h) - F(x - h)) / (2.0 * h);
}

std::string describeAt(const char* what, double x, double detail) {
    std::ostringstream os;
    os << what << " at x = " << formatReal(x, kRoundTripDigits) << " (" << formatReal(detail) << ")";
    return os.str();
}

}  // namespace

ValidationReport validateModel(const DensityModel& model, const ValidationOptions& options) {
    if (options.gridPoints < 2) throw Error(ErrorCode::InvalidParameter, "validation grid needs at least 2 points");
    ValidationReport report;
    const auto [lo, hi] = model.effectiveSupport;
    const double h = options.relativeStep * model.scale;
    const std::size_t n = options.gridPoints;

    report.derivativeOk = true;
    report.monotoneOk = true;
    double previousCdf = 0.0;
    double worstMonotoneDrop = 0.0;
    double worstMonotoneAt = lo;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = (i + 1 == n) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        const double density = model.pdf(x);
        const double slope = derivativeAt(model, x, h);
        const double normalised = std::abs(density - slope) / (options.derivativeTolerance * std::max(1.0, density));
        if (!(normalised <= report.maxDerivativeError)) {
            report.maxDerivativeError = normalised;
            report.maxDerivativeErrorAt = x;
        }
        const double cumulative = model.cdf(x);
        if (i > 0 && cumulative < previousCdf && previousCdf - cumulative > worstMonotoneDrop) {
            report.monotoneOk = false;
            worstMonotoneDrop = previousCdf - cumulative;
            worstMonotoneAt = x;
        }
        previousCdf = cumulative;
    }
    report.derivativeOk = report.maxDerivativeError <= 1.0;
    if (!report.derivativeOk) {
        report.failures.push_back(describeAt("pdf disagrees with dF/dx", report.maxDerivativeErrorAt,
                                             report.maxDerivativeError));
    }
    if (!report.monotoneOk) report.failures.push_back(describeAt("cdf decreases", worstMonotoneAt, worstMonotoneDrop));

    report.lowerLimit = model.cdf(lo);
    report.upperLimit = model.cdf(hi);
    report.limitsOk = std::abs(report.lowerLimit) <= options.limitTolerance &&
                      std::abs(1.0 - report.upperLimit) <= options.limitTolerance;
    if (!report.limitsOk) {
        std::ostringstream os;
        os << "cdf limits off: F(lo) = " << formatReal(report.lowerLimit) << ", F(hi) = " << formatReal(report.upperLimit);
        report.failures.push_back(os.str());
    }
    return report;
}

ValidationReport validateDistribution(const Distribution& d, const ValidationOptions& options) {
    return validateModel(modelOf(d), options);
}

}  // namespace softnum::prob
