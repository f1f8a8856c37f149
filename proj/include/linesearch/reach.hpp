#pragma once

#include "linesearch/optimal.hpp"

namespace linesearch {

/// Ratio budget R and lower bound lambda; meaningful for 3 <= R < 9.
struct ReachQuery {
    double ratio = 5.0;
    double lambda = 1.0;
};

struct ReachResult {
    /// Largest Lambda searchable with competitive ratio at most R.
    double Lambda = 0.0;
    int n = 0;
    /// (R - 1) / 2.
    double a0 = 0.0;
    /// Optimal strategy for [lambda, Lambda] with ratio exactly R.
    Strategy strategy;
};

/// Throws InvalidInput for R < 3 and UnboundedReach for R >= 9.
ReachResult maximal_reach(const ReachQuery& query);

}  // namespace linesearch
