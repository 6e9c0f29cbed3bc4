#pragma once

/**
 * @file geometry.hpp
 * @brief Soft Number Strip (SNS) coordinates and their images.
 *
 * A point on the strip has a signed height A and a signed width B ∈ [−1, 1].
 * It corresponds to the soft number x·0̄ ∔ y with
 *
 *     x = (1 − |B|)·A,   y = B·A,
 *
 * so |x| + |y| = |A|. The inverse uses sign(x); on the pure-real axis
 * (x = 0, y ≠ 0) the representative is A = |y|, B = sign(y): positive reals
 * sit on the right boundary and negative reals on the left one. The origin
 * maps to A = 0, B = 0.
 */

#include <numbers>

namespace softnum::geometry {

struct SnsPoint {
    double A = 0.0;  ///< signed height
    double B = 0.0;  ///< signed width in [−1, 1]

    friend bool operator==(const SnsPoint&, const SnsPoint&) noexcept = default;
};

struct PlanePoint {
    double x = 0.0;  ///< coefficient of 0̄
    double y = 0.0;  ///< real coefficient

    friend bool operator==(const PlanePoint&, const PlanePoint&) noexcept = default;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double X = 0.0;
    double Y = 0.0;
    double Z = 0.0;
};

/// Throws ErrorCode::WidthOutOfRange when |B| > 1 and NonFinite for NaN/inf.
PlanePoint abToXy(const SnsPoint& p);

PlanePoint abToXy(double A, double B);

SnsPoint xyToAb(const PlanePoint& q);

/// 1/x. Maps (0, 1] one-to-one onto [1, ∞). Throws ErrorCode::ZeroInput at 0.
double reciprocal(double x);

/// Intersection of the line joining H(x1) to V(1/x1) with the line joining
/// H(x2) to V(1/x2), where H(x) = (x − 1, 0) is the horizontal axis and
/// V(v) = (0, v − 1) the vertical one. Every such pair meets at (−1, −1).
/// Requires x1, x2 > 0, x1 ≠ x2 and neither equal to 1; otherwise throws
/// ErrorCode::ParallelLines.
Point2 reciprocalLineIntersection(double x1, double x2);

/// The point where all reciprocal lines meet.
inline constexpr Point2 kAbsoluteZero{-1.0, -1.0};

/// A = φR. Both require R > 1 and |A| ≤ πR (resp. |φ| ≤ π); violations throw
/// ErrorCode::OutOfRange.
double phiFromA(double A, double R);
double aFromPhi(double phi, double R);

/// X = (R + B cos(φ/2)) cos φ, Y = (R + B cos(φ/2)) sin φ, Z = B sin(φ/2).
/// Requires φ ∈ [−π, π], B ∈ [−1, 1], R > 1.
Vec3 mobiusPoint(double phi, double B, double R);

inline constexpr double kColorRed = 1.0;
inline constexpr double kColorYellow = 0.7;
inline constexpr double kColorGreen = 0.5;
inline constexpr double kColorBlue = 0.0;

/// 1 if A<0, B>0; 0.7 if A>0, B>0; 0.5 if A<0, B<0; 0 otherwise (including
/// the A = 0 and B = 0 lines).
double colorCode(double A, double B) noexcept;

struct MobiusVertex {
    Vec3 position;
    double colorCode = 0.0;
};

/// mobiusPoint at φ = A/R together with colorCode(A, B).
MobiusVertex mobiusVertex(const SnsPoint& p, double R);

}  // namespace softnum::geometry
