#include "softnum/commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "softnum/checks.hpp"
#include "softnum/error.hpp"

namespace softnum::cli {
namespace {

TEST(CmdEval, Examples) {
    EXPECT_EQ(cmdEval("(2z0 + 3) * (4z0 + 5)"), "22z0 + 15");
    EXPECT_EQ(cmdEval("exp(1z0 + 0)"), "1z0 + 1");
    EXPECT_EQ(cmdEval("(1z0 + 2)^3"), "12z0 + 8");
    EXPECT_THROW(cmdEval("(1z0"), ParseError);
}

TEST(CmdProb, Examples) {
    EXPECT_EQ(cmdProb("uniform(0,1)", "<= 0.5"), "1z0 + 0.5\n{\"soft\":1,\"real\":0.5}\n");
    EXPECT_EQ(cmdProb("normal(0,1)", "= 0"), "0.3989422804z0 + 0\n{\"soft\":0.3989422804014327,\"real\":0}\n");
    EXPECT_EQ(cmdProb("exp(1)", "< 0"), "0z0 + 0\n{\"soft\":0,\"real\":0}\n");
    EXPECT_EQ(cmdProb("uniform(0,1)", "in (0.2, 0.7]").substr(0, 10), "1z0 + 0.5\n");
}

TEST(CmdProb, QueryParsing) {
    EXPECT_EQ(parseQuery("<=1.5").kind, QueryKind::Leq);
    EXPECT_EQ(parseQuery("< -2").x, -2.0);
    const auto iv = parseQuery("in (1,2]");
    EXPECT_EQ(iv.kind, QueryKind::Interval);
    EXPECT_EQ(iv.lo, 1.0);
    EXPECT_EQ(iv.x, 2.0);
    EXPECT_THROW(parseQuery(">= 1"), ParseError);
    EXPECT_THROW(parseQuery("in (1,2)"), ParseError);
    EXPECT_THROW(parseQuery("<= 1 2"), ParseError);
    EXPECT_THROW(cmdProb("uniform(0,1)", "in (2,1]"), Error);
}

TEST(Config, ResolutionAndValidation) {
    EXPECT_EQ(parseResolution("100x20"), (geometry::Resolution{100, 20}));
    EXPECT_THROW(parseResolution("100"), ParseError);
    EXPECT_THROW(parseResolution("10x"), ParseError);
    EXPECT_THROW(parseResolution("ax3"), ParseError);

    CliConfig config;
    EXPECT_NO_THROW(config.validate());
    EXPECT_EQ(config.resolvedOutputPath(), "soft_mobius.csv");
    config.R = 1.0;
    EXPECT_THROW(config.validate(), Error);
    config.R = 10;
    config.resolution = {1, 10};
    EXPECT_THROW(config.validate(), Error);
}

TEST(CmdMesh, WritesRowsAndManifest) {
    const auto dir = std::filesystem::temp_directory_path() / "softnum_cmd_mesh";
    std::filesystem::create_directories(dir);
    CliConfig config;
    config.resolution = {100, 100};
    config.outputPath = dir / "m.csv";
    const auto manifest = cmdMesh(config);
    EXPECT_EQ(manifest.vertexCount, 10'000u);
    EXPECT_TRUE(std::filesystem::exists(io::manifestPathFor(config.outputPath)));
    EXPECT_EQ(cmdMesh(config).checksum, manifest.checksum);
}

TEST(Environment, ToleranceOverride) {
    ::unsetenv("SOFTNUM_TOLERANCE");
    EXPECT_FALSE(toleranceFromEnvironment().has_value());
    ::setenv("SOFTNUM_TOLERANCE", "1e-6", 1);
    EXPECT_EQ(toleranceFromEnvironment(), 1e-6);
    ::setenv("SOFTNUM_TOLERANCE", "-3", 1);
    EXPECT_THROW(toleranceFromEnvironment(), Error);
    ::unsetenv("SOFTNUM_TOLERANCE");
}

TEST(Checks, CleanRunPasses) {
    const auto report = check::runChecks({});
    EXPECT_TRUE(report.passed()) << check::formatReport(report);
    EXPECT_EQ(report.suites.size(), 5u);
}

TEST(Checks, PerturbationBreaksOnlyTheSeam) {
    check::CheckOptions options;
    options.perturb = 1e-3;
    const auto report = check::runChecks(options);
    EXPECT_FALSE(report.passed());
    for (const auto& s : report.suites) EXPECT_EQ(s.passed, s.name != "seam-gluing") << s.name;
}

TEST(Checks, SameSeedSameReport) {
    check::CheckOptions options;
    options.seed = 42;
    EXPECT_EQ(check::formatReport(check::runChecks(options)), check::formatReport(check::runChecks(options)));
}

TEST(Checks, ToleranceOverrideApplies) {
    check::CheckOptions options;
    options.tolerance = 1e-30;
    const auto report = check::runChecks(options);
    for (const auto& s : report.suites) {
        if (s.name != "tube-bound") EXPECT_EQ(s.tolerance, 1e-30);
    }
}

}  // namespace
}  // namespace softnum::cli
