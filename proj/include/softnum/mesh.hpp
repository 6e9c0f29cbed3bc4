#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "softnum/geometry.hpp"

namespace softnum::geometry {

enum class Surface { Sns, Cartesian, Mobius };

std::string_view toString(Surface surface) noexcept;
std::optional<Surface> parseSurface(std::string_view name) noexcept;

struct Resolution {
    std::size_t nPhi = 1000;
    std::size_t nB = 1000;

    friend bool operator==(const Resolution&, const Resolution&) noexcept = default;
};

/// One grid sample with every intermediate quantity. (X, Y, Z) is the
/// position emitted for the mesh's surface: (B, A, 0) for SNS, (x, y, 0) for
/// CARTESIAN, the embedding for MOBIUS.
struct MeshVertex {
    std::size_t i = 0;
    std::size_t j = 0;
    double phi = 0.0;
    double A = 0.0;
    double B = 0.0;
    double x = 0.0;
    double y = 0.0;
    double X = 0.0;
    double Y = 0.0;
    double Z = 0.0;
    double color = 0.0;
};

/// n evenly spaced samples over [lo, hi] with both endpoints exact. Samples
/// of a range symmetric about 0 mirror exactly.
std::vector<double> linspace(double lo, double hi, std::size_t n);

class Mesh {
public:
    Mesh(Surface surface, double R, Resolution resolution, std::vector<MeshVertex> vertices);

    Surface surface() const noexcept { return surface_; }
    double radius() const noexcept { return radius_; }
    Resolution resolution() const noexcept { return resolution_; }
    const std::vector<MeshVertex>& vertices() const noexcept { return vertices_; }

    /// Row-major: row i is φ_i, column j is B_j.
    std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * resolution_.nB + j; }
    const MeshVertex& at(std::size_t i, std::size_t j) const { return vertices_.at(index(i, j)); }

    /// Zero-based vertex triples, two per grid quad, wound counterclockwise
    /// when viewed from +Z at φ = 0.
    std::vector<std::array<std::size_t, 3>> triangles() const;

private:
    Surface surface_;
    double radius_;
    Resolution resolution_;
    std::vector<MeshVertex> vertices_;
};

/// φ_i uniform over [−π, π], B_j uniform over [−1, 1], A_i = φ_i·R.
/// Throws ErrorCode::InvalidParameter when nPhi or nB < 2, OutOfRange when
/// R ≤ 1. The result depends only on the arguments.
Mesh generateMesh(Surface surface, double R, Resolution resolution);

struct ColorCensus {
    std::size_t red = 0;          ///< A < 0, B > 0
    std::size_t yellow = 0;       ///< A > 0, B > 0
    std::size_t green = 0;        ///< A < 0, B < 0
    std::size_t blueQuadrant = 0; ///< A > 0, B < 0
    std::size_t axis = 0;         ///< A = 0 or B = 0
};

ColorCensus colorCensus(const std::vector<MeshVertex>& vertices);

/// True when each quadrant holds a quarter of the vertices to within one
/// full grid row or column.
bool quadrantsBalanced(const ColorCensus& census, Resolution resolution) noexcept;

}  // namespace softnum::geometry
