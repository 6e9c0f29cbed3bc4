#include "softnum/geometry.hpp"

#include <cmath>
#include <string>

#include "softnum/error.hpp"

namespace softnum::geometry {

namespace {

constexpr double kBoundSlack = 1e-12;

void requireFinite(double v, const char* what) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, std::string(what) + " must be finite");
}

void requireWidth(double B) {
    requireFinite(B, "width B");
    if (std::abs(B) > 1.0) throw Error(ErrorCode::WidthOutOfRange, "width B must lie in [-1, 1]");
}

void requireRadius(double R) {
    if (!std::isfinite(R) || !(R > 1.0)) throw Error(ErrorCode::OutOfRange, "radius R must be finite and > 1");
}

double signOf(double v) noexcept { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace

PlanePoint abToXy(const SnsPoint& p) {
    requireFinite(p.A, "height A");
    requireWidth(p.B);
    return PlanePoint{(1.0 - std::abs(p.B)) * p.A, p.B * p.A};
}

PlanePoint abToXy(double A, double B) { return abToXy(SnsPoint{A, B}); }

SnsPoint xyToAb(const PlanePoint& q) {
    requireFinite(q.x, "x");
    requireFinite(q.y, "y");
    const double norm = std::abs(q.x) + std::abs(q.y);
    if (norm == 0.0) return SnsPoint{0.0, 0.0};
    if (q.x == 0.0) return SnsPoint{std::abs(q.y), signOf(q.y)};
    const double s = signOf(q.x);
    return SnsPoint{norm * s, q.y * s / norm};
}

double reciprocal(double x) {
    requireFinite(x, "x");
    if (x == 0.0) throw Error(ErrorCode::ZeroInput, "reciprocal of zero");
    return 1.0 / x;
}

Point2 reciprocalLineIntersection(double x1, double x2) {
    requireFinite(x1, "x1");
    requireFinite(x2, "x2");
    if (!(x1 > 0.0) || !(x2 > 0.0) || x1 == 1.0 || x2 == 1.0 || x1 == x2) {
        throw Error(ErrorCode::ParallelLines, "reciprocal lines need distinct positive x1, x2 other than 1");
    }
    // Each line in implicit form n·P = c, n normal to the segment H(x)V(1/x).
    struct Line {
        double nx, ny, c;
    };
    auto lineThrough = [](double x) {
        const Point2 h{x - 1.0, 0.0};
        const Point2 v{0.0, 1.0 / x - 1.0};
        const double nx = v.y - h.y;
        const double ny = h.x - v.x;
        return Line{nx, ny, nx * h.x + ny * h.y};
    };
    const Line l1 = lineThrough(x1);
    const Line l2 = lineThrough(x2);
    const double det = l1.nx * l2.ny - l2.nx * l1.ny;
    if (det == 0.0) throw Error(ErrorCode::ParallelLines, "reciprocal lines are parallel");
    return Point2{(l1.c * l2.ny - l2.c * l1.ny) / det, (l1.nx * l2.c - l2.nx * l1.c) / det};
}

double phiFromA(double A, double R) {
    requireRadius(R);
    requireFinite(A, "height A");
    const double limit = std::numbers::pi * R;
    if (std::abs(A) > limit * (1.0 + kBoundSlack)) {
        throw Error(ErrorCode::OutOfRange, "height A must lie in [-piR, piR]");
    }
    return A / R;
}

double aFromPhi(double phi, double R) {
    requireRadius(R);
    requireFinite(phi, "angle phi");
    if (std::abs(phi) > std::numbers::pi * (1.0 + kBoundSlack)) {
        throw Error(ErrorCode::OutOfRange, "angle phi must lie in [-pi, pi]");
    }
    return phi * R;
}

Vec3 mobiusPoint(double phi, double B, double R) {
    requireRadius(R);
    requireWidth(B);
    requireFinite(phi, "angle phi");
    if (std::abs(phi) > std::numbers::pi * (1.0 + kBoundSlack)) {
        throw Error(ErrorCode::OutOfRange, "angle phi must lie in [-pi, pi]");
    }
    const double half = 0.5 * phi;
    const double radial = R + B * std::cos(half);
    return Vec3{radial * std::cos(phi), radial * std::sin(phi), B * std::sin(half)};
}

double colorCode(double A, double B) noexcept {
    if (A < 0.0 && B > 0.0) return kColorRed;
    if (A > 0.0 && B > 0.0) return kColorYellow;
    if (A < 0.0 && B < 0.0) return kColorGreen;
    return kColorBlue;
}

MobiusVertex mobiusVertex(const SnsPoint& p, double R) {
    return MobiusVertex{mobiusPoint(phiFromA(p.A, R), p.B, R), colorCode(p.A, p.B)};
}

}  // namespace softnum::geometry
