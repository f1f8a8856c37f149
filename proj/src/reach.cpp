#include "linesearch/reach.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "linesearch/errors.hpp"

namespace linesearch {

namespace {

constexpr double kFloorTolerance = 1e-12;

// alpha_{n+1} <= a0, up to rounding of the closed form.
bool admits(int n, double a0) {
    return n >= 0 && alpha(n + 1) <= a0 * (1.0 + kFloorTolerance);
}

}  // namespace

ReachResult maximal_reach(const ReachQuery& query) {
    if (!(query.lambda > 0.0) || !std::isfinite(query.lambda)) {
        throw InvalidInput("lambda must be positive and finite");
    }
    if (!(query.ratio >= 3.0)) {
        throw InvalidInput("ratio " + std::to_string(query.ratio) +
                           " is infeasible: even a known distance costs 3");
    }
    if (query.ratio >= 9.0) {
        throw UnboundedReach("unbounded reach: ratio " + std::to_string(query.ratio) +
                             " >= 9 searches any Lambda");
    }

    ReachResult out;
    out.a0 = 0.5 * (query.ratio - 1.0);
    const double q = std::numbers::pi / std::acos(0.5 * std::sqrt(out.a0));
    const double nearest = std::round(q);
    int n = static_cast<int>(std::floor(q)) - 3;
    if (std::abs(q - nearest) <= kFloorTolerance * q) {
        // On an integer boundary the two candidates give the same Lambda;
        // keep the larger one that the bracket admits.
        const int upper = static_cast<int>(nearest) - 3;
        n = admits(upper, out.a0) ? upper : upper - 1;
    }
    out.n = std::max(n, 0);

    const PolyEval reach = eval_p(out.n, out.a0);
    out.Lambda = reach.value() * query.lambda;
    if (!std::isfinite(out.Lambda)) {
        throw std::overflow_error("maximal reach 2^" + std::to_string(reach.log2_abs()) +
                                  " lambda exceeds the double range");
    }

    out.strategy.lambda = query.lambda;
    out.strategy.terminal = out.Lambda;
    out.strategy.turns = expand_sequence(out.a0, out.n);
    for (double& t : out.strategy.turns) {
        t *= query.lambda;
    }
    return out;
}

}  // namespace linesearch
