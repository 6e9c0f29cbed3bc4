#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "softnum/soft_number.hpp"

namespace softnum::testing {

inline double relErr(double actual, double expected) {
    if (actual == expected) return 0.0;
    return std::abs(actual - expected) / std::max(std::abs(actual), std::abs(expected));
}

/// Componentwise relative closeness, with an absolute floor scaled by `magnitude`
/// for components that cancel towards zero.
inline bool near(const SoftNumber& actual, const SoftNumber& expected, double tol, double magnitude = 0.0) {
    auto close = [&](double a, double e) { return relErr(a, e) <= tol || std::abs(a - e) <= tol * magnitude; };
    return close(actual.soft(), expected.soft()) && close(actual.real(), expected.real());
}

class SoftGen {
public:
    explicit SoftGen(std::uint64_t seed) : rng_(seed) {}

    SoftNumber real(double bound) {
        std::uniform_real_distribution<double> d(-bound, bound);
        return {d(rng_), d(rng_)};
    }

    /// Integer-valued components; sums and products stay exact.
    SoftNumber integral(int bound) {
        std::uniform_int_distribution<int> d(-bound, bound);
        return {static_cast<double>(d(rng_)), static_cast<double>(d(rng_))};
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace softnum::testing
