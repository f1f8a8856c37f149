#include "linesearch/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "linesearch/errors.hpp"

namespace linesearch {

namespace {

// Relative width of the zone in which the floating-point comparison
// (n+1) log2(gamma) > log2(rho) is not trusted.
constexpr double kTieTolerance = 1e-12;

Strategy build_strategy(const SearchProblem& problem, double a0, int n) {
    Strategy s;
    s.lambda = problem.lambda;
    s.terminal = problem.Lambda;
    s.turns = expand_sequence(a0, n);
    for (double& t : s.turns) {
        t *= problem.lambda;
    }
    return s;
}

// a_n from the same recurrence that produced the turns.
double next_term(double a0, const std::vector<double>& scaled_turns, double lambda) {
    const std::size_t n = scaled_turns.size();
    if (n == 0) {
        return a0;
    }
    if (n == 1) {
        return a0 * (a0 - 1.0);
    }
    return a0 * (scaled_turns[n - 1] - scaled_turns[n - 2]) / lambda;
}

}  // namespace

void SearchProblem::validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidInput("lambda must be positive and finite");
    }
    if (!(Lambda >= lambda) || !std::isfinite(Lambda)) {
        throw InvalidInput("Lambda must be finite and at least lambda");
    }
    if (!(epsilon > 0.0)) {
        throw InvalidInput("epsilon must be positive");
    }
}

bool Strategy::is_monotone() const {
    return std::is_sorted(turns.begin(), turns.end()) &&
           (turns.empty() || turns.back() <= terminal);
}

Strategy Strategy::scaled(double c) const {
    Strategy s = *this;
    for (double& t : s.turns) {
        t *= c;
    }
    s.terminal *= c;
    s.lambda *= c;
    return s;
}

int optimal_n(const PolyEval& rho) {
    if (!(rho >= PolyEval::from_double(1.0))) {
        throw InvalidInput("rho must be at least 1");
    }
    // floor(log2 rho) is the exponent of the normalized representation.
    const auto floor_log2 = static_cast<int>(rho.exp2);
    const double log2_rho = rho.log2_abs();
    const double gamma = 2.0 * std::cos(std::numbers::pi / (floor_log2 + 3));
    const double lhs = (floor_log2 + 1) * std::log2(gamma);

    int n = floor_log2;
    if (std::abs(lhs - log2_rho) <= kTieTolerance * std::max(1.0, log2_rho)) {
        // Half-open criterion: rho on the boundary belongs to the larger n.
        if (rho < p_at_alpha(n) * (1.0 - kTieTolerance)) {
            --n;
        }
    } else if (lhs > log2_rho) {
        --n;
    }
    return std::max(n, 0);
}

int optimal_n(double rho) { return optimal_n(PolyEval::from_double(rho)); }

std::vector<double> expand_sequence(double a0, int n) {
    if (n < 0) {
        throw InvalidInput("sequence length must be non-negative");
    }
    std::vector<double> a;
    a.reserve(static_cast<std::size_t>(n));
    if (n >= 1) {
        a.push_back(a0);
    }
    if (n >= 2) {
        a.push_back(a0 * (a0 - 1.0));
    }
    for (int i = 2; i < n; ++i) {
        a.push_back(a0 * (a[i - 1] - a[i - 2]));
    }
    return a;
}

OptimumSummary optimum(const PolyEval& rho, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw InvalidInput("epsilon must be positive");
    }
    OptimumSummary out;
    out.n = optimal_n(rho);
    if (out.n <= 3) {
        out.solve = solve_exact(out.n, rho.value());
        out.cr_error_bound = 0.0;
    } else if (out.n >= limit_threshold(epsilon)) {
        out.solve = solve_limit(out.n, rho);
        out.cr_error_bound = limit_error_bound(out.n);
    } else {
        out.solve = solve_numeric(out.n, rho, 0.5 * epsilon);
        // CR = 2 a0 + 1 and a0 is the midpoint of the final bracket.
        out.cr_error_bound = out.solve.bracket_width;
    }
    out.mode = out.solve.mode;
    out.a0 = out.solve.a0;
    out.cr = 2.0 * out.a0 + 1.0;
    return out;
}

StrategyReport optimize(const SearchProblem& problem) {
    problem.validate();
    const OptimumSummary best = optimum(PolyEval::from_double(problem.rho()), problem.epsilon);

    StrategyReport report;
    report.n = best.n;
    report.a0 = best.a0;
    report.cr = best.cr;
    report.mode = best.mode;
    report.cr_error_bound = best.cr_error_bound;
    report.solve = best.solve;
    report.strategy = build_strategy(problem, best.a0, best.n);
    report.terminal_ratio =
        next_term(best.a0, report.strategy.turns, problem.lambda) / problem.rho();
    return report;
}

StrategyReport strategy_with_cuts(const SearchProblem& problem, int n, double tol_a0) {
    problem.validate();
    StrategyReport report;
    report.n = n;
    report.solve = solve_largest_root(n, PolyEval::from_double(problem.rho()), tol_a0);
    report.mode = report.solve.mode;
    report.a0 = report.solve.a0;
    report.cr = 2.0 * report.a0 + 1.0;
    report.cr_error_bound = report.solve.bracket_width;
    report.strategy = build_strategy(problem, report.a0, n);
    report.terminal_ratio =
        next_term(report.a0, report.strategy.turns, problem.lambda) / problem.rho();
    return report;
}

double f_infinity(int i, double lambda) {
    if (i < 0) {
        throw InvalidInput("iteration index must be non-negative");
    }
    return (2.0 * i + 4.0) * std::ldexp(1.0, i) * lambda;
}

CrBounds cr_bounds(double log2_rho, int lower_offset) {
    const auto envelope = [](double denom) {
        const double c = std::cos(std::numbers::pi / denom);
        return 8.0 * c * c + 1.0;
    };
    return {envelope(std::ceil(log2_rho) + lower_offset), envelope(std::floor(log2_rho) + 4.0)};
}

}  // namespace linesearch
