// Command-line front end: optimal strategies, maximal reach, simulator
// verification and the m-ray family.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "linesearch/commands.hpp"

namespace {

void configure_logging() {
    auto logger = spdlog::stderr_color_mt("linesearch");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    const char* level = std::getenv("LINESEARCH_LOG");
    const std::string name = level ? level : "error";
    if (name == "debug") {
        spdlog::set_level(spdlog::level::debug);
    } else if (name == "info") {
        spdlog::set_level(spdlog::level::info);
    } else {
        spdlog::set_level(spdlog::level::err);
    }
}

struct SweepFlags {
    std::optional<double> rho_min;
    std::optional<double> rho_max;
    std::size_t points = 100;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--rho-min", rho_min, "Sweep: smallest rho");
        cmd->add_option("--rho-max", rho_max, "Sweep: largest rho");
        cmd->add_option("--points", points, "Sweep: number of log-spaced rho values");
    }

    std::optional<linesearch::SweepSpec> spec() const {
        if (!rho_min && !rho_max) {
            return std::nullopt;
        }
        if (!rho_min || !rho_max) {
            throw CLI::ValidationError("sweep needs both --rho-min and --rho-max");
        }
        return linesearch::SweepSpec{*rho_min, *rho_max, points};
    }
};

}  // namespace

int main(int argc, char** argv) {
    configure_logging();

    CLI::App app{"Optimal search on a bounded line and on m rays"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    linesearch::OptimalArgs optimal;
    std::optional<double> log2_rho;
    SweepFlags optimal_sweep;
    auto* cmd_optimal = app.add_subcommand("optimal", "Optimal strategy for [lambda, Lambda]");
    cmd_optimal->add_option("--lambda", optimal.lambda, "Lower bound on the target distance");
    cmd_optimal->add_option("--Lambda", optimal.Lambda, "Upper bound on the target distance");
    cmd_optimal->add_option("--eps", optimal.eps, "Tolerance on the competitive ratio");
    cmd_optimal->add_option("--log2-rho", log2_rho, "Give rho = Lambda/lambda as log2");
    cmd_optimal->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    optimal_sweep.add_to(cmd_optimal);

    linesearch::ReachArgs reach;
    auto* cmd_reach = app.add_subcommand("reach", "Largest Lambda reachable with ratio R");
    cmd_reach->add_option("--ratio", reach.ratio, "Competitive ratio budget R")->required();
    cmd_reach->add_option("--lambda", reach.lambda, "Lower bound on the target distance");
    cmd_reach->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    linesearch::VerifyArgs verify;
    SweepFlags verify_sweep;
    auto* cmd_verify = app.add_subcommand("verify", "Cross-check the optimizer with the simulator");
    cmd_verify->add_option("--lambda", verify.lambda, "Lower bound on the target distance");
    cmd_verify->add_option("--Lambda", verify.Lambda, "Upper bound on the target distance");
    cmd_verify->add_option("--eps", verify.eps, "Tolerance on the competitive ratio");
    cmd_verify->add_option("--grid-points", verify.grid_points, "Grid size of the brute-force sweep");
    cmd_verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    verify_sweep.add_to(cmd_verify);

    linesearch::MrayArgs mray;
    std::optional<std::size_t> horizon;
    auto* cmd_mray = app.add_subcommand("mray", "Family (a i + b)(m/(m-1))^i lambda on m rays");
    cmd_mray->add_option("--m", mray.m, "Number of rays")->required();
    cmd_mray->add_option("--a", mray.a, "Linear coefficient a");
    cmd_mray->add_option("--b", mray.b, "Offset b");
    cmd_mray->add_option("--lambda", mray.lambda, "Lower bound on the target distance");
    cmd_mray->add_option("--horizon", horizon, "Number of breakpoints examined");
    cmd_mray->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        linesearch::CommandResult result;
        if (cmd_optimal->parsed()) {
            optimal.log2_rho = log2_rho;
            optimal.sweep = optimal_sweep.spec();
            result = linesearch::run_optimal(optimal);
        } else if (cmd_reach->parsed()) {
            result = linesearch::run_reach(reach);
        } else if (cmd_verify->parsed()) {
            verify.sweep = verify_sweep.spec();
            result = linesearch::run_verify(verify);
        } else {
            mray.horizon = horizon;
            result = linesearch::run_mray(mray);
        }
        spdlog::info("{} finished, ok = {}", result.record.command, result.ok);
        spdlog::debug("diagnostics: {}", result.record.diagnostics.dump());
        std::cout << result.render(linesearch::parse_format(format));
        if (!result.ok) {
            spdlog::error("{}: a self-check failed", result.record.command);
        }
        return result.ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
