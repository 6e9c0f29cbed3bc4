#pragma once

/**
 * @file distribution.hpp
 * @brief Continuous distributions as CDF/PDF pairs.
 *
 * Queries outside the support return density 0 and a CDF of 0 or 1, so
 * every query is total. Infinite arguments are accepted (CDF(−∞) = 0,
 * CDF(+∞) = 1); NaN is a domain error.
 */

#include <random>
#include <string>
#include <string_view>

namespace softnum::prob {

enum class DistributionKind { Uniform, Exponential, Normal };

struct Interval {
    double lo;
    double hi;
};

class Distribution {
public:
    /// Each factory throws ErrorCode::InvalidParameter for invalid parameters
    /// (hi > lo, rate > 0, stddev > 0, all finite).
    static Distribution uniform(double lo, double hi);
    static Distribution exponential(double rate);
    static Distribution normal(double mean, double stddev);

    /// Parses `uniform(lo,hi)`, `exp(rate)` or `normal(mean,stddev)`.
    static Distribution parse(std::string_view literal);

    DistributionKind kind() const noexcept { return kind_; }
    double param1() const noexcept { return p1_; }
    double param2() const noexcept { return p2_; }

    double cdf(double x) const;
    double pdf(double x) const;

    /// Closure of the set where pdf > 0.
    Interval support() const noexcept;

    /// Bounded region used for validation grids: mean ± 8σ for Normal,
    /// [0, 40/rate] for Exponential, the support itself for Uniform.
    Interval effectiveSupport() const noexcept;

    /// Characteristic length: hi − lo, 1/rate or σ.
    double scale() const noexcept;

    template <typename Rng>
    double sample(Rng& rng) const {
        switch (kind_) {
            case DistributionKind::Uniform: return std::uniform_real_distribution<double>(p1_, p2_)(rng);
            case DistributionKind::Exponential: return std::exponential_distribution<double>(p1_)(rng);
            case DistributionKind::Normal: return std::normal_distribution<double>(p1_, p2_)(rng);
        }
        return 0.0;
    }

    std::string describe() const;

private:
    Distribution(DistributionKind kind, double p1, double p2) noexcept : kind_(kind), p1_(p1), p2_(p2) {}

    DistributionKind kind_;
    double p1_;
    double p2_;
};

/// Standard normal CDF Φ(z) = ½·erfc(−z/√2).
double standardNormalCdf(double z) noexcept;

}  // namespace softnum::prob
