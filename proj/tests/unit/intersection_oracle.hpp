#pragma once

#include <Eigen/Dense>

namespace softnum::testing {

/// Intersection of the segments H(x)→V(1/x) in parametric form, solved as a
/// 2×2 linear system P1 + t·d1 = P2 + s·d2 with a pivoted LU.
inline Eigen::Vector2d reciprocalLinesOracle(double x1, double x2) {
    const Eigen::Vector2d p1(x1 - 1.0, 0.0), q1(0.0, 1.0 / x1 - 1.0);
    const Eigen::Vector2d p2(x2 - 1.0, 0.0), q2(0.0, 1.0 / x2 - 1.0);
    Eigen::Matrix2d m;
    m.col(0) = q1 - p1;
    m.col(1) = -(q2 - p2);
    const Eigen::Vector2d ts = m.fullPivLu().solve(p2 - p1);
    return p1 + ts(0) * (q1 - p1);
}

}  // namespace softnum::testing
