#include "softnum/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "softnum/geometry.hpp"
#include "softnum/mesh.hpp"
#include "softnum/text.hpp"

namespace softnum::check {

using namespace softnum::geometry;

namespace {

double relativeError(double actual, double expected) {
    if (actual == expected) return 0.0;
    return std::abs(actual - expected) / std::max(std::abs(actual), std::abs(expected));
}

SuiteResult finish(std::string name, std::size_t cases, double maxError, double tolerance, std::string detail = {}) {
    return SuiteResult{std::move(name), maxError <= tolerance, cases, maxError, tolerance, std::move(detail)};
}

SuiteResult reciprocalSuite(const CheckOptions& options) {
    const double tolerance = options.tolerance.value_or(1e-15);
    constexpr std::size_t kSamples = 10000;
    double worst = 0.0;
    bool ordered = true;
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= kSamples; ++k) {
        const double x = static_cast<double>(k) / kSamples;  // (0, 1]
        const double image = reciprocal(x);
        worst = std::max(worst, relativeError(reciprocal(image), x));
        if (image < 1.0 || !(image < previous)) ordered = false;
        previous = image;
    }
    auto result = finish("reciprocal-involution", kSamples, worst, tolerance);
    if (!ordered) {
        result.passed = false;
        result.detail = "reciprocal not strictly decreasing onto [1, inf)";
    }
    return result;
}

SuiteResult intersectionSuite(const CheckOptions& options, std::mt19937_64& rng) {
    const double tolerance = options.tolerance.value_or(1e-9);
    constexpr std::size_t kPairs = 1000;
    std::uniform_real_distribution<double> below(0.0, 1.0);
    std::uniform_real_distribution<double> above(1.0, 50.0);
    std::bernoulli_distribution pickBelow(0.5);
    auto draw = [&] {
        for (;;) {
            const double x = pickBelow(rng) ? below(rng) : above(rng);
            if (x > 0.0 && x != 1.0) return x;
        }
    };
    double worst = 0.0;
    std::size_t done = 0;
    while (done < kPairs) {
        const double x1 = draw();
        const double x2 = draw();
        if (x1 == x2) continue;
        const Point2 p = reciprocalLineIntersection(x1, x2);
        worst = std::max(worst, std::hypot(p.x - kAbsoluteZero.x, p.y - kAbsoluteZero.y));
        ++done;
    }
    return finish("reciprocal-lines", kPairs, worst, tolerance);
}

SuiteResult seamSuite(const CheckOptions& options) {
    const double tolerance = options.tolerance.value_or(1e-12);
    constexpr std::size_t kWidths = 1001;
    const double pi = std::numbers::pi;
    double worst = 0.0;
    for (double B : linspace(-1.0, 1.0, kWidths)) {
        const Vec3 front = mobiusPoint(pi, B, options.R);
        const Vec3 back = mobiusPoint(-pi + options.perturb, -B, options.R);
        worst = std::max(worst, std::hypot(front.X - back.X, front.Y - back.Y, front.Z - back.Z));
    }
    return finish("seam-gluing", kWidths, worst, tolerance);
}

SuiteResult roundTripSuite(const CheckOptions& options, std::mt19937_64& rng) {
    const double tolerance = options.tolerance.value_or(1e-12);
    constexpr std::size_t kPoints = 10000;
    const double limit = std::numbers::pi * options.R;
    std::uniform_real_distribution<double> height(-limit, limit);
    std::uniform_real_distribution<double> width(-1.0, 1.0);
    double worst = 0.0;
    std::size_t done = 0;
    while (done < kPoints) {
        const SnsPoint p{height(rng), width(rng)};
        if (p.A == 0.0 || std::abs(p.B) == 1.0) continue;
        const PlanePoint q = abToXy(p);
        const SnsPoint back = xyToAb(q);
        worst = std::max({worst, relativeError(back.A, p.A), relativeError(back.B, p.B),
                          relativeError(std::abs(q.x) + std::abs(q.y), std::abs(p.A))});
        ++done;
    }
    auto result = finish("transform-roundtrip", kPoints, worst, tolerance);

    // Canonical representatives on the degenerate inputs.
    const bool canonical = xyToAb({0.0, 3.0}) == SnsPoint{3.0, 1.0} && xyToAb({0.0, -3.0}) == SnsPoint{3.0, -1.0} &&
                           xyToAb({0.0, 0.0}) == SnsPoint{0.0, 0.0} && abToXy(xyToAb({0.0, -3.0})) == PlanePoint{0.0, -3.0};
    if (!canonical) {
        result.passed = false;
        result.detail = "degenerate inputs do not map to the canonical representatives";
    }
    return result;
}

SuiteResult tubeSuite(const CheckOptions& options) {
    const Mesh mesh = generateMesh(Surface::Mobius, options.R, Resolution{201, 101});
    double worst = 0.0;
    for (const auto& v : mesh.vertices()) {
        const double radial = std::abs(std::hypot(v.X, v.Y) - options.R);
        worst = std::max({worst, radial, std::abs(v.Z)});
    }
    // Bound is 1 by construction; the override does not apply to a bound.
    return finish("tube-bound", mesh.vertices().size(), worst, 1.0 + 1e-12);
}

}  // namespace

bool CheckReport::passed() const noexcept {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

CheckReport runChecks(const CheckOptions& options) {
    std::mt19937_64 rng(options.seed);
    CheckReport report;
    report.suites.push_back(reciprocalSuite(options));
    report.suites.push_back(intersectionSuite(options, rng));
    report.suites.push_back(seamSuite(options));
    report.suites.push_back(roundTripSuite(options, rng));
    report.suites.push_back(tubeSuite(options));
    return report;
}

std::string formatReport(const CheckReport& report) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& s : report.suites) {
        if (!s.passed) ++failed;
        os << (s.passed ? "PASS " : "FAIL ") << s.name << " cases=" << s.cases
           << " max_error=" << formatReal(s.maxError, 6) << " tol=" << formatReal(s.tolerance, 6);
        if (!s.detail.empty()) os << " (" << s.detail << ')';
        os << '\n';
    }
    if (failed == 0) {
        os << "check: all " << report.suites.size() << " suites passed\n";
    } else {
        os << "check: " << failed << " of " << report.suites.size() << " suites failed\n";
    }
    return os.str();
}

}  // namespace softnum::check
