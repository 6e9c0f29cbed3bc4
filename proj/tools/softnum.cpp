#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "softnum/checks.hpp"
#include "softnum/commands.hpp"
#include "softnum/error.hpp"

using namespace softnum;

namespace {

int exitCodeFor(const Error& e) {
    return e.code() == ErrorCode::IoError ? cli::kExitIo : cli::kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Soft number algebra, soft probabilities and strip geometry"};
    app.require_subcommand(1);

    std::string expression;
    auto* eval = app.add_subcommand("eval", "Evaluate a soft-number expression, e.g. '(2z0 + 3) * (4z0 + 5)'");
    eval->add_option("expression", expression, "Expression to evaluate")->required();

    std::string distribution;
    std::string query;
    auto* prob = app.add_subcommand("prob", "Soft probability of a query, e.g. prob 'normal(0,1)' '<= 0'");
    prob->add_option("distribution", distribution, "uniform(lo,hi), exp(rate) or normal(mean,stddev)")->required();
    prob->add_option("query", query, "'<= x', '< x', '= x' or 'in (a,b]'")->required();

    check::CheckOptions checkOptions;
    auto* checkCmd = app.add_subcommand("check", "Run the geometry verification suites");
    checkCmd->add_option("--seed", checkOptions.seed, "Random seed")->capture_default_str();
    checkCmd->add_option("--perturb", checkOptions.perturb, "Perturb the seam comparison by this angle");
    checkCmd->add_option("--R", checkOptions.R, "Strip radius")->capture_default_str();

    cli::CliConfig meshConfig;
    std::string surface = "mobius";
    std::string format = "csv";
    std::string resolution = "1000x1000";
    std::string out;
    auto* mesh = app.add_subcommand("mesh", "Generate and export a strip mesh with a JSON manifest");
    mesh->add_option("--surface", surface, "sns, cartesian or mobius")
        ->check(CLI::IsMember({"sns", "cartesian", "mobius"}))
        ->capture_default_str();
    mesh->add_option("--R", meshConfig.R, "Strip radius (> 1)")->capture_default_str();
    mesh->add_option("--res", resolution, "Grid resolution NxM (phi samples x width samples)")->capture_default_str();
    mesh->add_option("--format", format, "csv or obj")->check(CLI::IsMember({"csv", "obj"}))->capture_default_str();
    mesh->add_option("--out", out, "Output path (default soft_<surface>.<format>)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kExitOk : cli::kExitUsage;
    }

    try {
        if (*eval) {
            std::cout << cli::cmdEval(expression) << '\n';
            return cli::kExitOk;
        }
        if (*prob) {
            std::cout << cli::cmdProb(distribution, query);
            return cli::kExitOk;
        }
        if (*checkCmd) {
            checkOptions.tolerance = cli::toleranceFromEnvironment();
            const auto report = check::runChecks(checkOptions);
            std::cout << check::formatReport(report);
            return report.passed() ? cli::kExitOk : cli::kExitCheckFailed;
        }
        if (*mesh) {
            meshConfig.surface = *geometry::parseSurface(surface);
            meshConfig.format = *io::parseFormat(format);
            meshConfig.resolution = cli::parseResolution(resolution);
            meshConfig.outputPath = out;
            meshConfig.tolerance = cli::toleranceFromEnvironment();
            const auto manifest = cli::cmdMesh(meshConfig);
            std::cout << "wrote " << manifest.vertexCount << " vertices to " << meshConfig.resolvedOutputPath().string()
                      << " (sha256 " << manifest.checksum << ")\n";
            return cli::kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exitCodeFor(e);
    }
    return cli::kExitUsage;
}
