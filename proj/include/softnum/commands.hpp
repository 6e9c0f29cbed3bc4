#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "softnum/mesh.hpp"
#include "softnum/mesh_io.hpp"
#include "softnum/soft_probability.hpp"

namespace softnum::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

/// Evaluates an expression and returns its canonical text.
std::string cmdEval(std::string_view expression);

enum class QueryKind { Leq, Lt, Eq, Interval };

struct ProbQuery {
    QueryKind kind = QueryKind::Leq;
    double x = 0.0;  ///< upper end for Interval
    double lo = 0.0; ///< lower end for Interval
};

/// `<= x`, `< x`, `= x` or `in (a,b]`. Throws ParseError.
ProbQuery parseQuery(std::string_view query);

prob::SoftProbability answer(const prob::Distribution& d, const ProbQuery& query);

/// Canonical soft number on the first line, `{"soft":…,"real":…}` on the second.
std::string cmdProb(std::string_view distribution, std::string_view query);

/// Parses `NxM`.
geometry::Resolution parseResolution(std::string_view text);

struct CliConfig {
    geometry::Surface surface = geometry::Surface::Mobius;
    double R = 10.0;
    geometry::Resolution resolution{1000, 1000};
    io::MeshFormat format = io::MeshFormat::Csv;
    std::filesystem::path outputPath;  ///< empty: soft_<surface>.<format>
    std::optional<double> tolerance;

    /// Throws ErrorCode::InvalidParameter unless R > 1 and both resolution
    /// components are at least 2.
    void validate() const;
    std::filesystem::path resolvedOutputPath() const;
};

io::MeshFileManifest cmdMesh(const CliConfig& config);

/// Reads SOFTNUM_TOLERANCE. Throws ErrorCode::InvalidParameter when it is set
/// but is not a positive finite number.
std::optional<double> toleranceFromEnvironment();

}  // namespace softnum::cli
