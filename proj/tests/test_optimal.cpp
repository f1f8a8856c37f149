#include <doctest.h>

#include <cmath>
#include <random>

#include "linesearch/errors.hpp"
#include "linesearch/optimal.hpp"
#include "linesearch/simulate.hpp"

using namespace linesearch;

TEST_CASE("optimal_n examples") {
    CHECK(optimal_n(1.0) == 0);
    CHECK(optimal_n(1.5) == 0);
    CHECK(optimal_n(4.0) == 1);
    CHECK(optimal_n(10.0) == 3);
    CHECK(optimal_n(20.0) == 4);
    CHECK(optimal_n(100.0) == 6);
    CHECK(optimal_n(1e4) == 12);
    CHECK(optimal_n(std::ldexp(1.0, 20)) == 19);
}

TEST_CASE("optimal_n certificate over a log sweep") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> logs(0.0, 60.0);
    for (int s = 0; s < 2000; ++s) {
        const PolyEval rho = PolyEval::from_log2(logs(rng));
        const int n = optimal_n(rho);
        CHECK(p_at_alpha(n) <= rho * (1.0 + 1e-12));
        CHECK(rho < p_at_alpha_next(n) * (1.0 + 1e-12));
    }
    for (double l2 : {500.0, 1000.0, 5000.0}) {
        const PolyEval rho = PolyEval::from_log2(l2);
        const int n = optimal_n(rho);
        CHECK(p_at_alpha(n) <= rho * (1.0 + 1e-12));
        CHECK(rho < p_at_alpha_next(n) * (1.0 + 1e-12));
    }
}

TEST_CASE("expand_sequence examples") {
    const auto s = expand_sequence(4.0, 4);
    REQUIRE(s.size() == 4);
    CHECK(s[0] == 4.0);
    CHECK(s[1] == 12.0);
    CHECK(s[2] == 32.0);
    CHECK(s[3] == 80.0);
    const auto t = expand_sequence(3.0, 3);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == 3.0);
    CHECK(t[1] == 6.0);
    CHECK(t[2] == 9.0);
    CHECK(expand_sequence(2.5, 0).empty());
}

TEST_CASE("optimize examples") {
    const StrategyReport one = optimize({1.0, 1.0, 1e-9});
    CHECK(one.n == 0);
    CHECK(one.cr == doctest::Approx(3.0));
    CHECK(one.strategy.turns.empty());
    CHECK(one.strategy.terminal == 1.0);

    const StrategyReport two = optimize({1.0, 2.0, 1e-9});
    CHECK(two.n == 1);
    CHECK(two.a0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(two.cr == doctest::Approx(5.0).epsilon(1e-14));

    const StrategyReport ten = optimize({1.0, 10.0, 1e-9});
    CHECK(ten.n == 3);
    CHECK(ten.mode == SolveMode::exact);
    CHECK(ten.cr == doctest::Approx(7.059109650863785723).epsilon(1e-14));
    REQUIRE(ten.strategy.turns.size() == 3);
    CHECK(ten.strategy.turns[1] == doctest::Approx(6.148647614865773970).epsilon(1e-13));
    CHECK(ten.strategy.turns[2] == doctest::Approx(9.449462611199237440).epsilon(1e-13));

    const double golden_sq = (3.0 + std::sqrt(5.0)) / 2.0;
    const StrategyReport g = optimize({1.0, 2.0 + std::sqrt(5.0), 1e-9});
    CHECK(g.a0 == doctest::Approx(golden_sq).epsilon(1e-12));
    CHECK(g.cr == doctest::Approx(4.0 + std::sqrt(5.0)).epsilon(1e-12));

    const StrategyReport twenty = optimize({2.0, 40.0, 1e-12});
    CHECK(twenty.n == 4);
    CHECK(twenty.mode == SolveMode::numeric);
    CHECK(twenty.cr == doctest::Approx(7.513222323266852618).epsilon(1e-11));
    CHECK(twenty.strategy.turns[0] == doctest::Approx(2.0 * 3.256611161633426309).epsilon(1e-11));

    const struct {
        double rho;
        double cr;
    } frozen[] = {{4.0, 6.123105625617660550},
                  {100.0, 8.101944510205587533},
                  {1e4, 8.680262592383782628},
                  {std::ldexp(1.0, 20), 8.841200571606838959}};
    for (const auto& f : frozen) {
        const StrategyReport r = optimize({1.0, f.rho, 1e-11});
        CHECK(std::abs(r.cr - f.cr) <= 1e-11);
    }

    CHECK_THROWS_AS(optimize({2.0, 1.0, 1e-9}), InvalidInput);
    CHECK_THROWS_AS(optimize({0.0, 1.0, 1e-9}), InvalidInput);
    CHECK_THROWS_AS(optimize({1.0, 3.0, 0.0}), InvalidInput);
}

TEST_CASE("optimal strategy is monotone and lands on Lambda") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> logs(0.0, 40.0);
    for (int s = 0; s < 300; ++s) {
        const double rho = std::exp2(logs(rng));
        const StrategyReport r = optimize({1.0, rho, 1e-10});
        CHECK(r.strategy.is_monotone());
        if (r.mode != SolveMode::limit_approx) {
            // a0 is only known to within the bracket; the recurrence amplifies
            // that by p_n'(a0) / p_n(a0).
            const auto [value, derivative] = eval_p_with_derivative(r.n, r.a0);
            const double slope = std::abs(ratio(derivative, value));
            CHECK(std::abs(r.terminal_ratio - 1.0) <= slope * r.solve.bracket_width + 1e-12);
        }
        if (!r.strategy.turns.empty()) {
            CHECK(r.strategy.turns.back() <= rho * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("no other cut count beats the optimal one") {
    for (double rho : {3.0, 7.5, 10.0, 20.0, 55.0, 300.0, 4096.0}) {
        const SearchProblem problem{1.0, rho, 1e-12};
        const StrategyReport best = optimize(problem);
        for (int n = std::max(0, best.n - 2); n <= best.n + 2; ++n) {
            const StrategyReport other = strategy_with_cuts(problem, n);
            if (!other.strategy.is_monotone()) {
                continue;
            }
            const double simulated =
                worst_case_ratio(other.strategy, problem.lambda, problem.Lambda).sup_ratio;
            CHECK(simulated >= best.cr - 1e-9);
        }
    }
}

TEST_CASE("CR envelopes") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> logs(0.0, 40.0);
    for (int s = 0; s < 1000; ++s) {
        const double l2 = logs(rng);
        const OptimumSummary r = optimum(PolyEval::from_log2(l2), 1e-10);
        const CrBounds proven = cr_bounds(l2, 1);
        CHECK(r.cr >= proven.lower - 1e-9);
        CHECK(r.cr <= proven.upper + 1e-9);
        CHECK(r.cr < 9.0);
        if (l2 >= 2.0) {
            const double band = (9.0 - r.cr) * l2 * l2;
            CHECK(band >= 1.0);
            CHECK(band <= 1000.0);
        }
    }
}

TEST_CASE("huge rho stays below nine") {
    const OptimumSummary r = optimum(PolyEval::from_log2(1000.0), 1e-9);
    CHECK(r.cr < 9.0);
    CHECK(r.cr > 8.99);
    CHECK(r.mode == SolveMode::numeric);
    const OptimumSummary big = optimum(PolyEval::from_log2(1e6), 1e-9);
    CHECK(big.mode == SolveMode::limit_approx);
    CHECK(big.cr < 9.0);
    CHECK(big.cr_error_bound <= 1e-9);
}

TEST_CASE("optimal turns approach f_infinity") {
    CHECK(f_infinity(0, 1.0) == 4.0);
    CHECK(f_infinity(1, 1.0) == 12.0);
    CHECK(f_infinity(3, 0.5) == 40.0);
    for (int k : {10, 20, 40}) {
        double previous = 0.0;
        for (int scale : {3, 6, 12, 24}) {
            const double rho = std::ldexp(1.0, scale * k);
            if (!std::isfinite(rho)) {
                continue;
            }
            const StrategyReport r = optimize({1.0, rho, 1e-12});
            REQUIRE(r.strategy.turns.size() > static_cast<std::size_t>(k));
            const double ratio = r.strategy.turns[k] / f_infinity(k, 1.0);
            CHECK(ratio < 1.0);
            CHECK(ratio > previous);
            previous = ratio;
        }
        MESSAGE("k = " << k << ": f(k) / f_inf(k) reaches " << previous);
    }
}
