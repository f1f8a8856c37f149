#include "linesearch/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "linesearch/errors.hpp"

namespace linesearch {

namespace {

void check_range(double lambda, double Lambda) {
    if (!(lambda > 0.0) || !(Lambda >= lambda) || !std::isfinite(Lambda)) {
        throw InvalidInput("require 0 < lambda <= Lambda < inf");
    }
}

void check_distance(double d) {
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw InvalidInput("target distance must be positive and finite");
    }
}

}  // namespace

double cost(const Strategy& strategy, const TargetSpec& target) {
    check_distance(target.distance);
    if (strategy.terminal < target.distance) {
        throw Unreachable("target at " + std::to_string(target.distance) +
                          " lies beyond the terminal distance " +
                          std::to_string(strategy.terminal));
    }
    double sum = 0.0;
    for (std::size_t j = 0;; ++j) {
        const double f = strategy.at(j);
        sum += f;
        if (f >= target.distance) {
            return 2.0 * sum + target.distance;
        }
    }
}

double walk_cost(const Strategy& strategy, const TargetSpec& target) {
    check_distance(target.distance);
    if (target.side != 0 && target.side != 1) {
        throw InvalidInput("side must be 0 or 1 on a line");
    }
    double walked = 0.0;
    // Iterations n and n+1 both go to the terminal, covering both sides.
    for (std::size_t i = 0; i <= strategy.size() + 1; ++i) {
        const double f = strategy.at(i);
        if (static_cast<int>(i % 2) == target.side && f >= target.distance) {
            return walked + target.distance;
        }
        walked += 2.0 * f;
    }
    throw Unreachable("target at " + std::to_string(target.distance) +
                      " is never reached on its side");
}

RatioReport worst_case_ratio(const Strategy& strategy, double lambda, double Lambda) {
    check_range(lambda, Lambda);
    if (strategy.terminal < Lambda) {
        throw IncompleteStrategy("strategy terminal " + std::to_string(strategy.terminal) +
                                 " does not reach Lambda = " + std::to_string(Lambda));
    }

    RatioReport report;
    double covered = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (std::size_t j = 0;; ++j) {
        const double f = strategy.at(j);
        sum += f;
        if (f >= lambda && f > covered) {
            // Targets in (covered, f] (closed at lambda) are found on iteration
            // j; cost/D decreases in D, so the sup sits at the lower end.
            const double lo = std::max(covered, lambda);
            const double hi = std::min(f, Lambda);
            if (covered < lambda || hi > lo) {
                const double sup = 1.0 + 2.0 * sum / lo;
                if (report.per_interval.empty() || sup > report.sup_ratio) {
                    report.sup_ratio = sup;
                    report.argmax_interval = report.per_interval.size();
                }
                report.per_interval.push_back({j, lo, hi, sup});
            }
        }
        covered = std::max(covered, f);
        if (covered >= Lambda) {
            break;
        }
    }
    return report;
}

double grid_sweep_ratio(const Strategy& strategy, double lambda, double Lambda,
                        std::size_t points) {
    check_range(lambda, Lambda);
    if (points < 2) {
        throw InvalidInput("grid needs at least two points");
    }
    if (strategy.terminal < Lambda) {
        throw IncompleteStrategy("strategy does not reach Lambda");
    }

    // reach[j] = max f(0..j), sums[j] = sum f(0..j); index size() is the terminal.
    std::vector<double> reach;
    std::vector<double> sums;
    double r = -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (std::size_t j = 0; j <= strategy.size(); ++j) {
        r = std::max(r, strategy.at(j));
        s += strategy.at(j);
        reach.push_back(r);
        sums.push_back(s);
    }

    const double log_span = std::log(Lambda / lambda);
    double best = 0.0;
    for (std::size_t k = 0; k < points; ++k) {
        double d = k + 1 == points
                       ? Lambda
                       : lambda * std::exp(log_span * static_cast<double>(k) /
                                           static_cast<double>(points - 1));
        d = std::clamp(d, lambda, Lambda);
        const auto j = static_cast<std::size_t>(
            std::lower_bound(reach.begin(), reach.end(), d) - reach.begin());
        best = std::max(best, (2.0 * sums[j] + d) / d);
    }
    return best;
}

std::string_view to_string(Baseline b) {
    switch (b) {
        case Baseline::power_of_two:
            return "power_of_two";
        case Baseline::f_infinity:
            return "f_infinity";
        case Baseline::los_sqrt:
            return "los_sqrt";
        case Baseline::single_shot:
            return "single_shot";
    }
    return "unknown";
}

Baseline parse_baseline(std::string_view name) {
    for (Baseline b : kAllBaselines) {
        if (to_string(b) == name) {
            return b;
        }
    }
    throw InvalidInput("unknown baseline '" + std::string(name) + "'");
}

Strategy baseline(Baseline which, double lambda, double Lambda) {
    check_range(lambda, Lambda);
    Strategy s;
    s.lambda = lambda;
    s.terminal = Lambda;
    if (which == Baseline::single_shot) {
        return s;
    }
    for (int i = 0;; ++i) {
        const double scale = std::ldexp(1.0, i) * lambda;
        double f = 0.0;
        switch (which) {
            case Baseline::power_of_two:
                f = scale;
                break;
            case Baseline::f_infinity:
                f = (2.0 * i + 4.0) * scale;
                break;
            default:
                f = std::sqrt(1.0 + 0.5 * i) * scale;
                break;
        }
        if (f >= Lambda) {
            break;
        }
        s.turns.push_back(f);
    }
    return s;
}

Strategy baseline(std::string_view name, double lambda, double Lambda) {
    return baseline(parse_baseline(name), lambda, Lambda);
}

}  // namespace linesearch
