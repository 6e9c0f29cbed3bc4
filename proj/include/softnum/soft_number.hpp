#pragma once

/**
 * @file soft_number.hpp
 * @brief Soft numbers: a·0̄ ∔ b with a nilpotent unit 0̄ (0̄² = 0).
 *
 * A soft number carries a soft part `a` (the coefficient of the soft zero 0̄)
 * and a real part `b`. Arithmetic is that of the dual numbers:
 *
 * @code
 * softnum::SoftNumber p{2.0, 3.0};   // 2·0̄ ∔ 3
 * softnum::SoftNumber q{4.0, 5.0};   // 4·0̄ ∔ 5
 * auto r = p * q;                    // 22·0̄ ∔ 15
 * @endcode
 *
 * All values are immutable and every operation is a pure function. Any
 * operation whose result would leave the finite doubles throws
 * softnum::Error with ErrorCode::ArithmeticOverflow.
 */

#include <compare>
#include <cstdint>
#include <span>

namespace softnum {

class SoftZero;

class SoftNumber {
public:
    /// 0·0̄ ∔ 0
    constexpr SoftNumber() noexcept = default;

    /// Throws ErrorCode::NonFinite when either component is NaN or infinite.
    SoftNumber(double soft, double real);

    SoftNumber(SoftZero zero);  // NOLINT: a soft zero is a soft number with real part 0

    static SoftNumber fromReal(double real) { return {0.0, real}; }
    static SoftNumber one() noexcept;

    double soft() const noexcept { return soft_; }
    double real() const noexcept { return real_; }

    /// Exact componentwise equality.
    friend bool operator==(const SoftNumber&, const SoftNumber&) noexcept = default;

    /// Lexicographic: real part first, soft part breaks ties.
    friend std::strong_ordering operator<=>(const SoftNumber& p, const SoftNumber& q) noexcept;

    SoftNumber operator-() const noexcept;

private:
    double soft_ = 0.0;
    double real_ = 0.0;
};

/// A pure multiple a·0̄ of the soft unit. Totally ordered by its coefficient.
class SoftZero {
public:
    constexpr SoftZero() noexcept = default;
    explicit SoftZero(double coeff);

    double coeff() const noexcept { return coeff_; }

    friend bool operator==(const SoftZero&, const SoftZero&) noexcept = default;
    friend std::strong_ordering operator<=>(const SoftZero& p, const SoftZero& q) noexcept;

    friend SoftZero operator+(SoftZero p, SoftZero q);
    friend SoftZero operator-(SoftZero p, SoftZero q);

    /// Nullity: the product of two soft zeros is the real number 0.
    friend constexpr double operator*(SoftZero, SoftZero) noexcept { return 0.0; }

private:
    double coeff_ = 0.0;
};

inline SoftZero softZero(double coeff) { return SoftZero{coeff}; }

SoftNumber operator+(const SoftNumber& p, const SoftNumber& q);
SoftNumber operator-(const SoftNumber& p, const SoftNumber& q);
SoftNumber operator*(const SoftNumber& p, const SoftNumber& q);

/// Requires q.real() != 0; soft zeros are zero divisors and have no inverse.
SoftNumber operator/(const SoftNumber& p, const SoftNumber& q);

SoftNumber add(const SoftNumber& p, const SoftNumber& q);
SoftNumber subtract(const SoftNumber& p, const SoftNumber& q);
SoftNumber mul(const SoftNumber& p, const SoftNumber& q);
SoftNumber div(const SoftNumber& p, const SoftNumber& q);

SoftNumber scalarMul(double k, const SoftNumber& p);
SoftZero scalarMul(double k, SoftZero z);

/// (a0̄ ∔ b)ⁿ = n·a·bⁿ⁻¹ 0̄ ∔ bⁿ, with p⁰ = 0·0̄ ∔ 1.
SoftNumber powNat(const SoftNumber& p, std::uint32_t n);

/// Evaluates c₀ + c₁t + … + c_N t^N at t = p. The soft part is α·P′(x).
/// Throws ErrorCode::InvalidParameter for an empty coefficient list.
SoftNumber evalPoly(std::span<const double> coeffs, const SoftNumber& p);

std::strong_ordering compare(const SoftNumber& p, const SoftNumber& q) noexcept;

// --------------------------------------------------------------------------
// Bridge representation
// --------------------------------------------------------------------------

enum class BridgeSide { Left, Right };

/// One ordered pairing: LEFT is a0̄ ⊥ b, RIGHT is b ⊥ a0̄.
/// The pairing does not commute, so sides never compare equal.
struct BridgeNumber {
    BridgeSide side = BridgeSide::Left;
    double softZeroCoeff = 0.0;
    double realCoeff = 0.0;

    friend bool operator==(const BridgeNumber&, const BridgeNumber&) noexcept = default;
};

struct BridgePair {
    BridgeNumber left;
    BridgeNumber right;

    friend bool operator==(const BridgePair&, const BridgePair&) noexcept = default;
};

BridgePair toBridgePair(const SoftNumber& p) noexcept;

/// Throws ErrorCode::MismatchedComponents if the two sides disagree or are
/// not tagged LEFT and RIGHT respectively.
SoftNumber fromBridgePair(const BridgePair& pair);

}  // namespace softnum
