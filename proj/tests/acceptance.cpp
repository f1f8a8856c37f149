// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linesearch/commands.hpp"
#include "linesearch/errors.hpp"
#include "linesearch/mrays.hpp"
#include "linesearch/optimal.hpp"
#include "linesearch/polynomials.hpp"
#include "linesearch/reach.hpp"
#include "linesearch/simulate.hpp"
#include "linesearch/solve.hpp"

using namespace linesearch;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            detail << what;
        }
        pass = pass && ok;
    }
};

struct Criterion {
    int id;
    std::string title;
    double time_limit;  // seconds, 0 = none
    std::function<void(Outcome&)> body;
};

bool rel_close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

const double kSweepRhos[] = {1.5, 4.0, 10.0, 20.0, 100.0, 1e4, 1048576.0};

std::vector<double> log_uniform_rhos() {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> logs(0.0, 40.0);
    std::vector<double> out(10000);
    for (double& r : out) {
        r = std::exp2(logs(rng));
    }
    return out;
}

void c1_root_table(Outcome& o) {
    // m = 2 column, n = 0..6; the n = 5 entry is the cubic root in radicals,
    // compared here against 4 cos^2(pi/7).
    const double want[] = {0.0,
                           1.0,
                           2.0,
                           (3.0 + std::sqrt(5.0)) / 2.0,
                           3.0,
                           4.0 * std::pow(std::cos(std::numbers::pi / 7.0), 2),
                           2.0 + std::sqrt(2.0)};
    for (int n = 0; n <= 6; ++n) {
        const double got = alpha(n);
        const double tab = alpha_table(2, n)->front();
        std::ostringstream what;
        what << "n=" << n << " alpha=" << got << " want " << want[n] << " table " << tab << ' ';
        o.require(std::abs(got - want[n]) <= 1e-12 && std::abs(tab - want[n]) <= 1e-12,
                  what.str());
    }
}

void c2_identities(Outcome& o) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> unit(0.0, 4.0);
    for (int n = 0; n <= 50; ++n) {
        for (int s = 0; s < 4; ++s) {
            const double x = unit(rng);
            double sum = 0.0;
            double magnitude = 0.0;
            for (int i = 0; i <= n; ++i) {
                const double pi = eval_p(i, x).value();
                sum += pi;
                magnitude += std::abs(pi);
            }
            const double pn = eval_p(n, x).value();
            magnitude += std::abs(x * pn);
            const double gap = std::abs(eval_p(n + 1, x).value() - (x * pn - sum));
            o.require(gap <= 1e-9 * magnitude, "recurrence identity n=" + std::to_string(n) + ' ');
        }
        const double a1 = alpha(n + 1);
        o.require(rel_close(eval_p(n, a1).value(), std::pow(a1, 0.5 * (n + 1)), 1e-9),
                  "p_n(alpha_{n+1}) n=" + std::to_string(n) + ' ');
        const double a2 = alpha(n + 2);
        o.require(rel_close(eval_p(n, a2).value(), std::pow(a2, 0.5 * (n + 2)), 1e-9),
                  "p_n(alpha_{n+2}) n=" + std::to_string(n) + ' ');
        o.require(rel_close(eval_p(n, 4.0).value(), (2.0 * n + 4.0) * std::exp2(n), 1e-9),
                  "p_i(4) i=" + std::to_string(n) + ' ');
    }
}

void c3_boundaries(Outcome& o) {
    const double tol = 1e-10;
    const StrategyReport one = optimize({1.0, 1.0, 1e-12});
    o.require(std::abs(one.cr - 3.0) <= tol, "rho=1 ");

    const StrategyReport two = optimize({1.0, 2.0, 1e-12});
    o.require(std::abs(two.cr - 5.0) <= tol, "rho=2 ");
    for (int n : {0, 1}) {
        const double a0 = solve_exact(n, 2.0).a0;
        o.require(std::abs(2.0 * a0 + 1.0 - 5.0) <= tol, "rho=2 n=" + std::to_string(n) + ' ');
    }

    const double rho = 2.0 + std::sqrt(5.0);
    const StrategyReport g = optimize({1.0, rho, 1e-12});
    o.require(std::abs(g.cr - (4.0 + std::sqrt(5.0))) <= tol, "rho=2+sqrt5 ");
    for (int n : {1, 2}) {
        const double a0 = solve_exact(n, rho).a0;
        o.require(std::abs(2.0 * a0 + 1.0 - (4.0 + std::sqrt(5.0))) <= tol,
                  "rho=2+sqrt5 n=" + std::to_string(n) + ' ');
    }
    o.detail << "cr(1)=" << one.cr << " cr(2)=" << two.cr << " cr(2+sqrt5)=" << g.cr;
}

void c4_certificate(Outcome& o) {
    for (double rho : log_uniform_rhos()) {
        const PolyEval r = PolyEval::from_double(rho);
        const int n = optimal_n(r);
        const PolyEval lo = p_at_alpha(n);
        const PolyEval hi = p_at_alpha_next(n);
        const int fl = static_cast<int>(std::floor(std::log2(rho)));
        const bool ok = PolyEval::pow2(n) <= lo && lo <= r && r < hi &&
                        hi <= PolyEval::pow2(n + 2) && (n == fl || n == fl - 1);
        std::ostringstream what;
        what << "rho=" << rho << " n=" << n << ' ';
        o.require(ok, what.str());
    }
}

void c5_equalization(Outcome& o) {
    for (double rho : kSweepRhos) {
        const StrategyReport r = optimize({1.0, rho, 1e-12});
        const RatioReport w = worst_case_ratio(r.strategy, 1.0, rho);
        const double grid = grid_sweep_ratio(r.strategy, 1.0, rho, 100000);
        double lo = w.per_interval.front().sup;
        double hi = lo;
        for (const auto& iv : w.per_interval) {
            lo = std::min(lo, iv.sup);
            hi = std::max(hi, iv.sup);
        }
        std::ostringstream what;
        what << "rho=" << rho << " sup=" << w.sup_ratio << " 2a0+1=" << 2.0 * r.a0 + 1.0
             << " spread=" << hi - lo << " grid gap=" << w.sup_ratio - grid << ' ';
        o.require(std::abs(w.sup_ratio - (2.0 * r.a0 + 1.0)) <= 1e-9 && hi - lo <= 1e-9 &&
                      grid <= w.sup_ratio && w.sup_ratio - grid <= 1e-3,
                  what.str());
    }
}

void c6_exhaustion(Outcome& o) {
    for (double rho : kSweepRhos) {
        const SearchProblem problem{1.0, rho, 1e-12};
        const StrategyReport best = optimize(problem);
        for (int d : {-2, -1, 1, 2}) {
            const int n = best.n + d;
            if (n < 0) {
                continue;
            }
            const StrategyReport other = strategy_with_cuts(problem, n);
            std::ostringstream what;
            what << "rho=" << rho << " n=" << best.n << " cr=" << best.cr << " vs n=" << n
                 << " cr=" << other.cr << ' ';
            o.require(best.cr <= other.cr + 1e-9, what.str());
        }
    }
}

void c7_limit_bound(Outcome& o) {
    for (int n : {4, 8, 16, 32}) {
        const PolyEval rho = p_at_alpha_next(n) * (1.0 - 1e-6);
        const double limit = 2.0 * solve_limit(n, rho).a0 + 1.0;
        const double numeric = 2.0 * solve_numeric(n, rho, 1e-14).a0 + 1.0;
        const double bound = limit_error_bound(n);
        std::ostringstream what;
        what << "n=" << n << " gap=" << std::abs(limit - numeric) << " bound=" << bound << ' ';
        o.require(std::abs(limit - numeric) <= bound, what.str());
    }
}

void c8_band(Outcome& o) {
    std::size_t lower_fail = 0;
    std::size_t upper_fail = 0;
    std::size_t nine_fail = 0;
    std::size_t band_fail = 0;
    std::size_t proven_fail = 0;
    double first_lower_rho = 0.0;
    double first_band_rho = 0.0;
    const auto rhos = log_uniform_rhos();
    for (double rho : rhos) {
        const double l2 = std::log2(rho);
        const double cr = optimum(PolyEval::from_double(rho), 1e-12).cr;
        const CrBounds stated = cr_bounds(l2, 2);
        const CrBounds proven = cr_bounds(l2, 1);
        if (cr < stated.lower - 1e-9) {
            if (lower_fail++ == 0) {
                first_lower_rho = rho;
            }
        }
        upper_fail += cr > stated.upper + 1e-9;
        proven_fail += cr < proven.lower - 1e-9 || cr > proven.upper + 1e-9;
        nine_fail += !(cr < 9.0);
        const double band = (9.0 - cr) * l2 * l2;
        if (band < 1.0 || band > 1000.0) {
            if (band_fail++ == 0) {
                first_band_rho = rho;
            }
        }
    }
    o.pass = lower_fail == 0 && upper_fail == 0 && nine_fail == 0 && band_fail == 0;
    o.detail << "of " << rhos.size() << ": below lower=" << lower_fail;
    if (lower_fail) {
        o.detail << " (first rho=" << first_lower_rho << ")";
    }
    o.detail << " above upper=" << upper_fail << " not<9=" << nine_fail
             << " outside [1,1e3] band=" << band_fail;
    if (band_fail) {
        o.detail << " (first rho=" << first_band_rho << ")";
    }
    o.detail << "; with lower offset +1: violations=" << proven_fail;
}

void c9_reach(Outcome& o) {
    const ReachResult five = maximal_reach({5.0, 1.0});
    const ReachResult seven = maximal_reach({7.0, 1.0});
    o.require(std::abs(five.Lambda - 2.0) <= 1e-10, "reach(5,1) ");
    o.require(std::abs(seven.Lambda - 9.0) <= 1e-10, "reach(7,1) ");
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double R = 3.1 + (8.9 - 3.1) * k / 99.0;
        const ReachResult r = maximal_reach({R, 1.0});
        const double cr = optimize({1.0, r.Lambda, 1e-12}).cr;
        worst = std::max(worst, std::abs(cr - R));
        o.require(std::abs(cr - R) <= 1e-8, "R=" + std::to_string(R) + ' ');
    }
    o.detail << "Lambda(5)=" << five.Lambda << " Lambda(7)=" << seven.Lambda
             << " max |cr-R|=" << worst;
}

void c10_mrays(Outcome& o) {
    int entries = 0;
    for (int m = 2; m <= 5; ++m) {
        for (int n = 0; n <= 6; ++n) {
            entries += verify_alpha_table(m, n);
        }
    }
    o.require(entries == 28, "alpha table entries passing=" + std::to_string(entries) + ' ');
    for (int m = 2; m <= 5; ++m) {
        const MrayRatioReport r = mray_worst_ratio({m, 0.0, 1.0, 1.0}, 200);
        std::ostringstream what;
        what << "m=" << m << " worst=" << r.sup_ratio << " bound=" << r.bound << ' ';
        o.require(std::abs(r.sup_ratio - r.bound) <= 1e-3, what.str());
    }
    for (int m = 2; m <= 5; ++m) {
        for (double a : {0.0, 0.25, 0.5, 1.0}) {
            const BInterval iv = feasible_b_interval(m, a);
            if (iv.empty()) {
                continue;
            }
            for (double b : {iv.lo * 0.99, iv.hi * 1.01}) {
                bool fired = false;
                try {
                    validate({m, a, b, 1.0});
                } catch (const InfeasibleParameters&) {
                    fired = true;
                }
                o.require(fired, "no infeasibility for m=" + std::to_string(m) +
                                     " a=" + std::to_string(a) + " b=" + std::to_string(b) + ' ');
            }
        }
    }
}

void c11_large_rho(Outcome& o) {
    OptimalArgs args;
    args.log2_rho = 1000.0;
    args.eps = 1e-9;
    const CommandResult r = run_optimal(args);
    const double cr = r.record.results["cr"].get<double>();
    o.require(std::isfinite(cr) && cr < 9.0, "cr not below 9 ");
    o.detail << "n=" << r.record.results["n"] << " cr=" << cr
             << " mode=" << r.record.results["mode"].get<std::string>();
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "closed-form root table", 1.0, c1_root_table},
        {2, "polynomial identities", 1.0, c2_identities},
        {3, "boundary exactness", 0.0, c3_boundaries},
        {4, "optimal-n certificate sweep", 10.0, c4_certificate},
        {5, "simulator equalization", 30.0, c5_equalization},
        {6, "optimality by exhaustion", 0.0, c6_exhaustion},
        {7, "limit-approximation error bound", 0.0, c7_limit_bound},
        {8, "CR band and ratio-9 limit", 0.0, c8_band},
        {9, "maximal reach round trip", 10.0, c9_reach},
        {10, "m-ray suite", 10.0, c10_mrays},
        {11, "large-rho robustness", 0.0, c11_large_rho},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0.0 && secs > c.time_limit) {
            o.pass = false;
            o.detail << " [runtime " << secs << " s over " << c.time_limit << " s]";
        }
        failed += !o.pass;
        std::printf("%s  %2d  %-34s %7.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), secs, o.detail.str().c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
