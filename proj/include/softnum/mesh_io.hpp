#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "softnum/mesh.hpp"

namespace softnum::io {

enum class MeshFormat { Csv, Obj };

std::string_view toString(MeshFormat format) noexcept;
std::optional<MeshFormat> parseFormat(std::string_view name) noexcept;

/// Exact CSV header; one row per vertex follows, row-major in i.
inline constexpr std::string_view kCsvHeader = "i,j,phi,A,B,x,y,X,Y,Z,color";

void writeCsv(const geometry::Mesh& mesh, std::ostream& out);

/// `v X Y Z r g b` per vertex, then two `f` triangles per grid quad.
void writeObj(const geometry::Mesh& mesh, std::ostream& out);

/// Piecewise-linear jet ramp: channel k is clamp(1.5 − |4c − k|, 0, 1)
/// for k = 3 (red), 2 (green), 1 (blue).
std::array<double, 3> jetColor(double code) noexcept;

/// Reads rows written by writeCsv. Throws ParseError on a header or row that
/// does not match the schema.
std::vector<geometry::MeshVertex> readCsv(std::istream& in);

/// Incremental SHA-256, hex encoded.
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    void update(std::string_view bytes);
    std::string hexDigest();

    static std::string of(std::string_view bytes);

private:
    struct State;
    State* state_;
};

struct MeshFileManifest {
    geometry::Surface surface = geometry::Surface::Mobius;
    double R = 10.0;
    geometry::Resolution resolution;
    std::size_t vertexCount = 0;
    MeshFormat format = MeshFormat::Csv;
    std::string checksum;  ///< SHA-256 of the exact bytes written

    friend bool operator==(const MeshFileManifest&, const MeshFileManifest&) = default;
};

std::string manifestJson(const MeshFileManifest& manifest);
MeshFileManifest parseManifestJson(std::string_view json);

/// `<out>.manifest.json`
std::filesystem::path manifestPathFor(const std::filesystem::path& out);

/// Writes the mesh to `out` in the given format and the manifest next to it.
/// Throws ErrorCode::IoError when either file cannot be written.
MeshFileManifest exportMesh(const geometry::Mesh& mesh, MeshFormat format, const std::filesystem::path& out);

}  // namespace softnum::io
