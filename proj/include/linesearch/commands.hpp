#pragma once

#include <cstddef>
#include <optional>

#include "linesearch/output.hpp"

namespace linesearch {

/// Log-spaced batch over rho in [rho_min, rho_max].
struct SweepSpec {
    double rho_min = 1.0;
    double rho_max = 1024.0;
    std::size_t points = 100;
};

struct OptimalArgs {
    double lambda = 1.0;
    double Lambda = 1.0;
    double eps = 1e-9;
    /// When set, rho = 2^log2_rho and Lambda is ignored.
    std::optional<double> log2_rho;
    std::optional<SweepSpec> sweep;
};

struct ReachArgs {
    double ratio = 5.0;
    double lambda = 1.0;
};

struct VerifyArgs {
    double lambda = 1.0;
    double Lambda = 1.0;
    double eps = 1e-9;
    std::size_t grid_points = 100000;
    std::optional<SweepSpec> sweep;
};

struct MrayArgs {
    int m = 2;
    double a = 0.0;
    double b = 1.0;
    double lambda = 1.0;
    /// Defaults to the horizon where the remaining gap is below 1e-6 of the bound.
    std::optional<std::size_t> horizon;
};

/// Command output plus whether every computation and self-check succeeded.
/// Sweeps also carry their rows for the flat table format.
struct CommandResult {
    OutputRecord record;
    bool ok = true;
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;

    std::string render(OutputFormat format) const;
};

CommandResult run_optimal(const OptimalArgs& args);
CommandResult run_reach(const ReachArgs& args);
CommandResult run_verify(const VerifyArgs& args);
CommandResult run_mray(const MrayArgs& args);

/// rho values log-spaced over the sweep range (inclusive).
std::vector<double> sweep_values(const SweepSpec& spec);

}  // namespace linesearch
