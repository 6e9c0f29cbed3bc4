#include "softnum/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "softnum/error.hpp"

namespace softnum::geometry {

std::string_view toString(Surface surface) noexcept {
    switch (surface) {
        case Surface::Sns: return "sns";
        case Surface::Cartesian: return "cartesian";
        case Surface::Mobius: return "mobius";
    }
    return "?";
}

std::optional<Surface> parseSurface(std::string_view name) noexcept {
    if (name == "sns") return Surface::Sns;
    if (name == "cartesian") return Surface::Cartesian;
    if (name == "mobius") return Surface::Mobius;
    return std::nullopt;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidParameter, "linspace needs at least 2 samples");
    // Offsets from the midpoint are antisymmetric, so a symmetric range
    // yields exactly mirrored samples and an exact 0 at an odd midpoint.
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const auto last = static_cast<double>(n - 1);
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double ratio = (2.0 * static_cast<double>(k) - last) / last;
        out[k] = mid + half * ratio;
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

Mesh::Mesh(Surface surface, double R, Resolution resolution, std::vector<MeshVertex> vertices)
    : surface_(surface), radius_(R), resolution_(resolution), vertices_(std::move(vertices)) {
    if (vertices_.size() != resolution_.nPhi * resolution_.nB) {
        throw Error(ErrorCode::InvalidParameter, "vertex count does not match the resolution");
    }
}

std::vector<std::array<std::size_t, 3>> Mesh::triangles() const {
    std::vector<std::array<std::size_t, 3>> out;
    if (resolution_.nPhi < 2 || resolution_.nB < 2) return out;
    out.reserve(2 * (resolution_.nPhi - 1) * (resolution_.nB - 1));
    for (std::size_t i = 0; i + 1 < resolution_.nPhi; ++i) {
        for (std::size_t j = 0; j + 1 < resolution_.nB; ++j) {
            const std::size_t a = index(i, j);
            const std::size_t b = index(i, j + 1);
            const std::size_t c = index(i + 1, j + 1);
            const std::size_t d = index(i + 1, j);
            out.push_back({a, b, c});
            out.push_back({a, c, d});
        }
    }
    return out;
}

Mesh generateMesh(Surface surface, double R, Resolution resolution) {
    if (resolution.nPhi < 2 || resolution.nB < 2) {
        throw Error(ErrorCode::InvalidParameter, "mesh resolution components must be at least 2");
    }
    if (!std::isfinite(R) || !(R > 1.0)) throw Error(ErrorCode::OutOfRange, "radius R must be finite and > 1");

    const auto phis = linspace(-std::numbers::pi, std::numbers::pi, resolution.nPhi);
    const auto widths = linspace(-1.0, 1.0, resolution.nB);

    std::vector<MeshVertex> vertices;
    vertices.reserve(resolution.nPhi * resolution.nB);
    for (std::size_t i = 0; i < resolution.nPhi; ++i) {
        const double phi = phis[i];
        const double A = phi * R;
        for (std::size_t j = 0; j < resolution.nB; ++j) {
            MeshVertex v;
            v.i = i;
            v.j = j;
            v.phi = phi;
            v.A = A;
            v.B = widths[j];
            const PlanePoint plane = abToXy(A, v.B);
            v.x = plane.x;
            v.y = plane.y;
            v.color = colorCode(A, v.B);
            switch (surface) {
                case Surface::Sns:
                    v.X = v.B;
                    v.Y = A;
                    break;
                case Surface::Cartesian:
                    v.X = plane.x;
                    v.Y = plane.y;
                    break;
                case Surface::Mobius: {
                    const Vec3 p = mobiusPoint(phi, v.B, R);
                    v.X = p.X;
                    v.Y = p.Y;
                    v.Z = p.Z;
                    break;
                }
            }
            vertices.push_back(v);
        }
    }
    return Mesh(surface, R, resolution, std::move(vertices));
}

ColorCensus colorCensus(const std::vector<MeshVertex>& vertices) {
    ColorCensus census;
    for (const auto& v : vertices) {
        if (v.color == kColorRed) {
            ++census.red;
        } else if (v.color == kColorYellow) {
            ++census.yellow;
        } else if (v.color == kColorGreen) {
            ++census.green;
        } else if (v.A > 0.0 && v.B < 0.0) {
            ++census.blueQuadrant;
        } else {
            ++census.axis;
        }
    }
    return census;
}

bool quadrantsBalanced(const ColorCensus& census, Resolution resolution) noexcept {
    const double quarter = static_cast<double>(resolution.nPhi * resolution.nB) / 4.0;
    const double slack = static_cast<double>(std::max(resolution.nPhi, resolution.nB));
    for (std::size_t count : {census.red, census.yellow, census.green, census.blueQuadrant}) {
        if (std::abs(static_cast<double>(count) - quarter) > slack) return false;
    }
    return true;
}

}  // namespace softnum::geometry
