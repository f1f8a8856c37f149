#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "linesearch/simulate.hpp"

namespace linesearch {

/// Member f(i) = (a i + b) (m / (m-1))^i lambda of the optimal family for m
/// unbounded rays.
struct RayFamilyParams {
    int m = 2;
    double a = 0.0;
    double b = 1.0;
    double lambda = 1.0;
};

/// Closed interval of admissible b; empty when lo > hi.
struct BInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool empty() const { return lo > hi; }
    bool contains(double b, double rel_tol = 1e-12) const;
};

/// m^m / (m-1)^(m-1).
double ray_constant(int m);
/// 1 + 2 m^m / (m-1)^(m-1): optimal ratio on m unbounded rays.
double mray_ratio_bound(int m);
/// 1 + 2 (m-1): optimal ratio when the distance is known.
double mray_known_distance_ratio(int m);

/// sup{1, m a} <= b <= ((K - m^2) a + m K / (m-1)) / (K - m), K = ray_constant(m).
BInterval feasible_b_interval(int m, double a);

/// Throws InfeasibleParameters (carrying the interval) if (a, b) is outside the
/// family, InvalidInput for m < 2 or lambda <= 0.
void validate(const RayFamilyParams& params);

/// First `count` values of f_{a,b}, validated.
std::vector<double> family_strategy(const RayFamilyParams& params, std::size_t count);
/// Same without the feasibility check (for probing infeasible parameters).
std::vector<double> family_values(const RayFamilyParams& params, std::size_t count);

using SequenceFn = std::function<double(std::size_t)>;

/// Worst-case cost on m rays: with j the first iteration whose turn reaches D,
/// 2 sum_{i <= j + m - 2} f(i) + D.
double mray_cost(const SequenceFn& f, int m, const TargetSpec& target);

/// Ray-resolved walk: iteration i explores ray i % m.
double mray_walk_cost(const SequenceFn& f, int m, const TargetSpec& target);

struct MrayRatioReport {
    double sup_ratio = 0.0;
    double bound = 0.0;
    double lower_bound = 0.0;
    /// bound - sup_ratio.
    double residual = 0.0;
    std::size_t horizon = 0;
    bool first_turn_below_lambda = false;
    /// Entry 0 covers [lambda, f(0)]; entry j+1 covers (f(j), f(j+1)].
    std::vector<double> sup_per_breakpoint;
    /// Ratio at the upper end of the same intervals.
    std::vector<double> inf_per_breakpoint;
};

/// Breakpoint ratios of an arbitrary turn sequence on m rays. Needs
/// horizon + m - 1 values.
MrayRatioReport mray_breakpoint_ratios(std::span<const double> values, int m, double lambda,
                                       std::size_t horizon);

/// Horizon whose remaining gap to the bound is below 1e-6 of the bound.
std::size_t default_horizon(const RayFamilyParams& params);

/// Sup of phi / D over D up to f(horizon) for a feasible family member.
MrayRatioReport mray_worst_ratio(const RayFamilyParams& params, std::size_t horizon);

/// Multivariate p_n on x = (x_0, ..., x_{m-2}):
/// p_n = x_n (n <= m-2), p_{m-1} = |x| (x_0 - 1),
/// p_n = |x| (p_{n-(m-1)} - p_{n-m}) (n >= m).
double multi_p(int n, std::span<const double> point, int m);

/// Tabulated closed form of alpha-bar_n for 2 <= m <= 5, 0 <= n <= 6.
std::optional<std::vector<double>> alpha_table(int m, int n);

struct AlphaCheck {
    bool ok = false;
    bool ordered = false;
    /// max |p_k(alpha-bar_n)| over k = n .. n+m-2.
    double max_residual = 0.0;
};

AlphaCheck check_alpha_table(int m, int n, double tol = 1e-10);
bool verify_alpha_table(int m, int n);

/// Extreme family member a = m/(m-1)^2, b = m^2/(m-1)^2 (f_infinity for m = 2).
RayFamilyParams mray_f_infinity_params(int m, double lambda = 1.0);

struct FixedPointCheck {
    double lhs = 0.0;  ///< p_n(f(0), ..., f(m-2))
    double rhs = 0.0;  ///< f(n)
    double rel_error = 0.0;
    bool ok = false;
};

FixedPointCheck check_f_infinity_fixed_point(int m, int n, double tol = 1e-9);
bool f_infinity_fixed_point(int m, int n);

}  // namespace linesearch
