#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace softnum::check {

struct CheckOptions {
    std::uint64_t seed = 42;
    /// Shifts the glued side of the seam by this angle; a negative control.
    double perturb = 0.0;
    /// Replaces every suite's default tolerance when set.
    std::optional<double> tolerance;
    double R = 10.0;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::size_t cases = 0;
    double maxError = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct CheckReport {
    std::vector<SuiteResult> suites;

    bool passed() const noexcept;
};

/// Reciprocal bijection, reciprocal-line intersection, seam gluing, strip
/// transform round trips and the tube bound. Deterministic in the options.
CheckReport runChecks(const CheckOptions& options);

/// One line per suite plus a summary line.
std::string formatReport(const CheckReport& report);

}  // namespace softnum::check
