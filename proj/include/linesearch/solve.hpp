#pragma once

#include <optional>
#include <string_view>

#include "linesearch/polynomials.hpp"

namespace linesearch {

enum class SolveMode { exact, limit_approx, numeric };

std::string_view to_string(SolveMode mode);

/// Root a0 of p_n(x) = rho together with how it was obtained.
struct SolveResult {
    double a0 = 0.0;
    SolveMode mode = SolveMode::exact;
    /// |p_n(a0) - rho|, saturating to inf for rho beyond the double range.
    double residual = 0.0;
    /// residual / rho.
    double relative_residual = 0.0;
    /// Final enclosing interval [bracket_lo, bracket_hi] of the true root.
    /// For limit_approx this is the whole admissible interval.
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double bracket_width = 0.0;
    int iterations = 0;
};

/// Relative slack admitted at the ends of [p_n(alpha_{n+1}), p_n(alpha_{n+2})).
inline constexpr double kBracketSlack = 1e-12;

/// True when p_n(alpha_{n+1}) <= rho <= p_n(alpha_{n+2}) up to kBracketSlack.
bool in_solving_bracket(int n, const PolyEval& rho);

/// Largest real root of x^3 + c2 x^2 + c1 x + c0, by radicals (real
/// trigonometric form when all three roots are real).
double largest_real_root_cubic(double c2, double c1, double c0);

/// Largest real root of x^4 + c3 x^3 + c2 x^2 + c1 x + c0 via the resolvent
/// cubic; throws InvalidInput if the quartic has no real root.
double largest_real_root_quartic(double c3, double c2, double c1, double c0);

/// a0 for n <= 3 by radicals. Requires rho >= 1 inside the solving bracket.
SolveResult solve_exact(int n, double rho);

/// a0 within tol_a0 of the true root on [alpha_{n+1}, alpha_{n+2}], by
/// bisection accelerated with Newton steps.
SolveResult solve_numeric(int n, const PolyEval& rho, double tol_a0);
SolveResult solve_numeric(int n, double rho, double tol_a0);

/// a0 = alpha_{n+2}. The residual is filled in only when rho is given.
SolveResult solve_limit(int n, std::optional<PolyEval> rho = std::nullopt);

/// Largest root of p_n(x) = rho for any n (no optimality requirement on n).
/// This is the a0 of the n-cut strategy f_n.
SolveResult solve_largest_root(int n, const PolyEval& rho, double tol_a0);

/// 7^3 (n+4)^-3: CR error incurred by taking a0 = alpha_{n+2}.
double limit_error_bound(int n);

/// 7 eps^{-1/3} - 4; at or above this n the limit solution is eps-accurate.
double limit_threshold(double eps);

}  // namespace linesearch
