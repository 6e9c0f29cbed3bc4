#include "softnum/soft_number.hpp"

#include <cmath>
#include <string>

#include "softnum/error.hpp"

namespace softnum {

namespace {

void requireFinite(double soft, double real) {
    if (!std::isfinite(soft) || !std::isfinite(real)) {
        throw Error(ErrorCode::NonFinite, "soft number components must be finite");
    }
}

SoftNumber checked(double soft, double real, const char* op) {
    if (!std::isfinite(soft) || !std::isfinite(real)) {
        throw Error(ErrorCode::ArithmeticOverflow, std::string(op) + " left the finite range");
    }
    return SoftNumber{soft, real};
}

std::strong_ordering compareDoubles(double lhs, double rhs) noexcept {
    // Finite by construction, so < and == are a total order.
    if (lhs < rhs) return std::strong_ordering::less;
    if (rhs < lhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

SoftNumber::SoftNumber(double soft, double real) : soft_(soft), real_(real) {
    requireFinite(soft, real);
}

SoftNumber::SoftNumber(SoftZero zero) : soft_(zero.coeff()), real_(0.0) {}

SoftNumber SoftNumber::one() noexcept {
    SoftNumber result;
    result.real_ = 1.0;
    return result;
}

SoftNumber SoftNumber::operator-() const noexcept {
    SoftNumber result;
    result.soft_ = -soft_;
    result.real_ = -real_;
    return result;
}

std::strong_ordering operator<=>(const SoftNumber& p, const SoftNumber& q) noexcept {
    if (auto byReal = compareDoubles(p.real_, q.real_); byReal != 0) return byReal;
    return compareDoubles(p.soft_, q.soft_);
}

SoftZero::SoftZero(double coeff) : coeff_(coeff) {
    if (!std::isfinite(coeff)) throw Error(ErrorCode::NonFinite, "soft zero coefficient must be finite");
}

std::strong_ordering operator<=>(const SoftZero& p, const SoftZero& q) noexcept {
    return compareDoubles(p.coeff_, q.coeff_);
}

SoftZero operator+(SoftZero p, SoftZero q) {
    const double sum = p.coeff_ + q.coeff_;
    if (!std::isfinite(sum)) throw Error(ErrorCode::ArithmeticOverflow, "soft zero sum left the finite range");
    return SoftZero{sum};
}

SoftZero operator-(SoftZero p, SoftZero q) {
    const double diff = p.coeff_ - q.coeff_;
    if (!std::isfinite(diff)) throw Error(ErrorCode::ArithmeticOverflow, "soft zero difference left the finite range");
    return SoftZero{diff};
}

SoftNumber operator+(const SoftNumber& p, const SoftNumber& q) {
    return checked(p.soft() + q.soft(), p.real() + q.real(), "addition");
}

SoftNumber operator-(const SoftNumber& p, const SoftNumber& q) {
    return checked(p.soft() - q.soft(), p.real() - q.real(), "subtraction");
}

SoftNumber operator*(const SoftNumber& p, const SoftNumber& q) {
    // (a0̄ ∔ b)(c0̄ ∔ d) = (ad + bc)0̄ ∔ bd; the ac·0̄² term vanishes.
    return checked(p.soft() * q.real() + p.real() * q.soft(), p.real() * q.real(), "multiplication");
}

SoftNumber operator/(const SoftNumber& p, const SoftNumber& q) {
    if (q.real() == 0.0) {
        throw Error(ErrorCode::DivisionByZeroReal, "divisor has zero real part");
    }
    const double d = q.real();
    return checked((p.soft() * d - p.real() * q.soft()) / (d * d), p.real() / d, "division");
}

SoftNumber add(const SoftNumber& p, const SoftNumber& q) { return p + q; }
SoftNumber subtract(const SoftNumber& p, const SoftNumber& q) { return p - q; }
SoftNumber mul(const SoftNumber& p, const SoftNumber& q) { return p * q; }
SoftNumber div(const SoftNumber& p, const SoftNumber& q) { return p / q; }

SoftNumber scalarMul(double k, const SoftNumber& p) {
    if (!std::isfinite(k)) throw Error(ErrorCode::NonFinite, "scalar must be finite");
    return checked(k * p.soft(), k * p.real(), "scalar multiplication");
}

SoftZero scalarMul(double k, SoftZero z) {
    if (!std::isfinite(k)) throw Error(ErrorCode::NonFinite, "scalar must be finite");
    const double coeff = k * z.coeff();
    if (!std::isfinite(coeff)) throw Error(ErrorCode::ArithmeticOverflow, "scalar multiplication left the finite range");
    return SoftZero{coeff};
}

SoftNumber powNat(const SoftNumber& p, std::uint32_t n) {
    if (n == 0) return SoftNumber::one();
    const double b = p.real();
    const double lower = std::pow(b, static_cast<double>(n - 1));
    return checked(static_cast<double>(n) * p.soft() * lower, lower * b, "natural power");
}

SoftNumber evalPoly(std::span<const double> coeffs, const SoftNumber& p) {
    if (coeffs.empty()) throw Error(ErrorCode::InvalidParameter, "polynomial needs at least one coefficient");
    const double x = p.real();
    // Horner on P and P′ together.
    double value = 0.0;
    double slope = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (!std::isfinite(*it)) throw Error(ErrorCode::NonFinite, "polynomial coefficients must be finite");
        slope = slope * x + value;
        value = value * x + *it;
    }
    return checked(p.soft() * slope, value, "polynomial evaluation");
}

std::strong_ordering compare(const SoftNumber& p, const SoftNumber& q) noexcept { return p <=> q; }

BridgePair toBridgePair(const SoftNumber& p) noexcept {
    return BridgePair{
        BridgeNumber{BridgeSide::Left, p.soft(), p.real()},
        BridgeNumber{BridgeSide::Right, p.soft(), p.real()},
    };
}

SoftNumber fromBridgePair(const BridgePair& pair) {
    if (pair.left.side != BridgeSide::Left || pair.right.side != BridgeSide::Right) {
        throw Error(ErrorCode::MismatchedComponents, "bridge pair must hold one LEFT and one RIGHT number");
    }
    if (pair.left.softZeroCoeff != pair.right.softZeroCoeff || pair.left.realCoeff != pair.right.realCoeff) {
        throw Error(ErrorCode::MismatchedComponents, "bridge pair sides carry different components");
    }
    return SoftNumber{pair.left.softZeroCoeff, pair.left.realCoeff};
}

}  // namespace softnum
