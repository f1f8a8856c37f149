#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "linesearch/optimal.hpp"

namespace linesearch {

/// Concrete target: distance from the origin and the side (0 = the side
/// explored by iteration 0, 1 = the other side).
struct TargetSpec {
    double distance = 1.0;
    int side = 0;
};

/// Supremum of cost / D over one breakpoint interval (lo, hi] of targets
/// found by iteration `iteration` in the worst orientation.
struct IntervalRatio {
    std::size_t iteration = 0;
    double lo = 0.0;
    double hi = 0.0;
    double sup = 0.0;
};

struct RatioReport {
    double sup_ratio = 0.0;
    std::size_t argmax_interval = 0;
    std::vector<IntervalRatio> per_interval;
};

/// phi(f, D) = 2 sum_{i <= j} f(i) + D, with j the first iteration reaching D.
/// Throws Unreachable when D exceeds the terminal distance.
double cost(const Strategy& strategy, const TargetSpec& target);

/// Distance actually walked until the target is seen when the searcher
/// explores side i % 2 during iteration i.
double walk_cost(const Strategy& strategy, const TargetSpec& target);

/// Exact sup of phi(f, D) / D over D in [lambda, Lambda], evaluated as the
/// limit at the lower end of every breakpoint interval.
RatioReport worst_case_ratio(const Strategy& strategy, double lambda, double Lambda);

/// max of phi(f, D) / D over `points` geometrically spaced D in
/// [lambda, Lambda]; never exceeds worst_case_ratio.
double grid_sweep_ratio(const Strategy& strategy, double lambda, double Lambda,
                        std::size_t points);

enum class Baseline { power_of_two, f_infinity, los_sqrt, single_shot };

std::string_view to_string(Baseline b);
/// Throws InvalidInput for an unknown name.
Baseline parse_baseline(std::string_view name);
inline constexpr Baseline kAllBaselines[] = {Baseline::power_of_two, Baseline::f_infinity,
                                             Baseline::los_sqrt, Baseline::single_shot};

/// Named strategy, truncated before its first value reaching Lambda, with
/// terminal Lambda.
Strategy baseline(Baseline which, double lambda, double Lambda);
Strategy baseline(std::string_view name, double lambda, double Lambda);

}  // namespace linesearch
