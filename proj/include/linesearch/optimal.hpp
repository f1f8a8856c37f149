#pragma once

#include <cstddef>
#include <vector>

#include "linesearch/polynomials.hpp"
#include "linesearch/solve.hpp"

namespace linesearch {

/// Target distance known to lie in [lambda, Lambda]; epsilon is the CR
/// tolerance for instances that cannot be solved by radicals.
struct SearchProblem {
    double lambda = 1.0;
    double Lambda = 1.0;
    double epsilon = 1e-9;

    double rho() const { return Lambda / lambda; }
    /// Throws InvalidInput unless 0 < lambda <= Lambda and epsilon > 0.
    void validate() const;
};

/// Turn distances f(0), ..., f(n-1); every later iteration goes to the
/// terminal distance, so f(i) = terminal for i >= n.
struct Strategy {
    std::vector<double> turns;
    double terminal = 0.0;
    double lambda = 1.0;

    /// f(i) with the terminal tail.
    double at(std::size_t i) const { return i < turns.size() ? turns[i] : terminal; }
    std::size_t size() const { return turns.size(); }
    bool is_monotone() const;
    Strategy scaled(double c) const;
};

struct StrategyReport {
    Strategy strategy;
    int n = 0;
    double a0 = 0.0;
    double cr = 0.0;
    SolveMode mode = SolveMode::exact;
    /// 0 for exact solutions, otherwise an upper bound on CR - CR_opt.
    double cr_error_bound = 0.0;
    SolveResult solve;
    /// a_n = p_n(a0) from the expanded recurrence, relative to rho (ideally 1).
    double terminal_ratio = 1.0;
};

/// The n, a0 and CR of the optimal strategy without materializing the turns;
/// usable for rho far beyond the double range.
struct OptimumSummary {
    int n = 0;
    double a0 = 0.0;
    double cr = 0.0;
    SolveMode mode = SolveMode::exact;
    double cr_error_bound = 0.0;
    SolveResult solve;
};

/// Unique n with p_n(alpha_{n+1}) <= rho < p_n(alpha_{n+2}).
int optimal_n(const PolyEval& rho);
int optimal_n(double rho);

/// {a_0, ..., a_{n-1}} with a_1 = a0(a0 - 1), a_i = a0(a_{i-1} - a_{i-2}).
std::vector<double> expand_sequence(double a0, int n);

/// Optimal n, a0 and CR for rho, dispatching between radicals, the limit
/// formula and the numeric solver.
OptimumSummary optimum(const PolyEval& rho, double epsilon);

/// Optimal strategy for the problem, with its competitive ratio 2 a0 + 1.
StrategyReport optimize(const SearchProblem& problem);

/// The n-cut strategy f_n for an arbitrary n (not necessarily optimal):
/// a0 is the largest root of p_n(x) = rho.
StrategyReport strategy_with_cuts(const SearchProblem& problem, int n, double tol_a0 = 1e-13);

/// (2i + 4) 2^i lambda.
double f_infinity(int i, double lambda);

/// Lower and upper CR envelopes in terms of log2(rho):
/// lower = 8 cos^2(pi / (ceil(log2 rho) + lower_offset)) + 1,
/// upper = 8 cos^2(pi / (floor(log2 rho) + 4)) + 1.
struct CrBounds {
    double lower;
    double upper;
};
CrBounds cr_bounds(double log2_rho, int lower_offset = 2);

}  // namespace linesearch
