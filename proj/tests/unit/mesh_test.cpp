#include "softnum/mesh.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "softnum/error.hpp"

namespace softnum::geometry {
namespace {

using std::numbers::pi;

TEST(Linspace, EndpointsExact) {
    const auto v = linspace(-pi, pi, 1000);
    ASSERT_EQ(v.size(), 1000u);
    EXPECT_EQ(v.front(), -pi);
    EXPECT_EQ(v.back(), pi);
    EXPECT_THROW(linspace(0, 1, 1), Error);
}

TEST(Linspace, SymmetricRangesMirrorExactly) {
    for (std::size_t n : {2u, 3u, 101u, 1000u}) {
        const auto v = linspace(-pi, pi, n);
        for (std::size_t k = 0; k < n; ++k) ASSERT_EQ(v[k], -v[n - 1 - k]);
        if (n % 2 == 1) EXPECT_EQ(v[n / 2], 0.0);
    }
}

TEST(GenerateMesh, SnsCorners) {
    const Mesh mesh = generateMesh(Surface::Sns, 10, {3, 3});
    ASSERT_EQ(mesh.vertices().size(), 9u);
    const auto corner = [&](std::size_t i, std::size_t j) { return mesh.at(i, j); };
    EXPECT_EQ(corner(0, 0).X, -1.0);
    EXPECT_EQ(corner(0, 0).Y, -10 * pi);
    EXPECT_EQ(corner(0, 2).X, 1.0);
    EXPECT_EQ(corner(2, 0).Y, 10 * pi);
    EXPECT_EQ(corner(2, 2).X, 1.0);
    EXPECT_EQ(corner(2, 2).Y, 10 * pi);
    EXPECT_EQ(corner(1, 1).Y, 0.0);
    EXPECT_EQ(corner(0, 2).color, 1.0);   // A < 0, B > 0
    EXPECT_EQ(corner(2, 2).color, 0.7);   // A > 0, B > 0
    EXPECT_EQ(corner(0, 0).color, 0.5);   // A < 0, B < 0
    EXPECT_EQ(corner(2, 0).color, 0.0);   // A > 0, B < 0
    EXPECT_EQ(corner(1, 1).color, 0.0);   // axes
}

TEST(GenerateMesh, CartesianStaysInsideTheDiamond) {
    for (double R : {1.5, 10.0, 33.0}) {
        const Mesh mesh = generateMesh(Surface::Cartesian, R, {57, 31});
        for (const auto& v : mesh.vertices()) {
            ASSERT_LE(std::abs(v.X) + std::abs(v.Y), pi * R + 1e-9);
            ASSERT_EQ(v.X, v.x);
            ASSERT_EQ(v.Y, v.y);
            ASSERT_EQ(v.Z, 0.0);
        }
    }
}

TEST(GenerateMesh, MobiusDefaultsAndTubeBound) {
    const double R = 10;
    const Mesh mesh = generateMesh(Surface::Mobius, R, {1000, 1000});
    ASSERT_EQ(mesh.vertices().size(), 1'000'000u);
    EXPECT_EQ(mesh.at(0, 0).phi, -pi);
    EXPECT_EQ(mesh.at(999, 0).phi, pi);
    for (const auto& v : mesh.vertices()) {
        ASSERT_LE(std::abs(std::hypot(v.X, v.Y) - R), 1.0 + 1e-12);
        ASSERT_LE(std::abs(v.Z), 1.0);
        ASSERT_EQ(v.A, v.phi * R);
    }
    const auto census = colorCensus(mesh.vertices());
    EXPECT_EQ(census.red, 250'000u);
    EXPECT_EQ(census.yellow, 250'000u);
    EXPECT_EQ(census.green, 250'000u);
    EXPECT_EQ(census.blueQuadrant, 250'000u);
    EXPECT_EQ(census.axis, 0u);
    EXPECT_TRUE(quadrantsBalanced(census, mesh.resolution()));
}

TEST(GenerateMesh, OddResolutionPutsTheAxesInClassZero) {
    const Mesh mesh = generateMesh(Surface::Sns, 10, {101, 51});
    const auto census = colorCensus(mesh.vertices());
    EXPECT_EQ(census.axis, 101u + 51u - 1u);
    EXPECT_TRUE(quadrantsBalanced(census, mesh.resolution()));
}

TEST(GenerateMesh, RejectsBadParameters) {
    EXPECT_THROW(generateMesh(Surface::Mobius, 10, {1, 5}), Error);
    EXPECT_THROW(generateMesh(Surface::Mobius, 10, {5, 1}), Error);
    EXPECT_THROW(generateMesh(Surface::Mobius, 1.0, {5, 5}), Error);
    EXPECT_THROW(generateMesh(Surface::Mobius, std::nan(""), {5, 5}), Error);
}

TEST(GenerateMesh, Deterministic) {
    const Mesh a = generateMesh(Surface::Mobius, 4, {40, 12});
    const Mesh b = generateMesh(Surface::Mobius, 4, {40, 12});
    for (std::size_t k = 0; k < a.vertices().size(); ++k) {
        ASSERT_EQ(a.vertices()[k].X, b.vertices()[k].X);
        ASSERT_EQ(a.vertices()[k].Y, b.vertices()[k].Y);
        ASSERT_EQ(a.vertices()[k].Z, b.vertices()[k].Z);
    }
}

TEST(Mesh, TrianglesWindCounterclockwiseAtPhiZero) {
    const Mesh mesh = generateMesh(Surface::Mobius, 10, {41, 5});
    const auto tris = mesh.triangles();
    EXPECT_EQ(tris.size(), 2u * 40u * 4u);
    const std::size_t mid = 20;  // φ = 0
    ASSERT_EQ(mesh.at(mid, 0).phi, 0.0);
    for (const auto& t : tris) {
        const auto& a = mesh.vertices()[t[0]];
        if (a.i != mid) continue;
        const auto& b = mesh.vertices()[t[1]];
        const auto& c = mesh.vertices()[t[2]];
        const double nz = (b.X - a.X) * (c.Y - a.Y) - (b.Y - a.Y) * (c.X - a.X);
        EXPECT_GT(nz, 0.0);
    }
}

TEST(Surface, NamesRoundTrip) {
    for (auto s : {Surface::Sns, Surface::Cartesian, Surface::Mobius}) EXPECT_EQ(parseSurface(toString(s)), s);
    EXPECT_FALSE(parseSurface("torus").has_value());
}

}  // namespace
}  // namespace softnum::geometry
