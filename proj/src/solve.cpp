#include "linesearch/solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "linesearch/errors.hpp"

namespace linesearch {

namespace {

constexpr int kMaxIterations = 400;

void fill_residual(SolveResult& r, int n, const PolyEval& rho) {
    const PolyEval diff = eval_p(n, r.a0) - rho;
    r.residual = std::abs(diff.value());
    r.relative_residual = std::abs(ratio(diff, rho));
}

// Hybrid Newton/bisection for p_n(x) = rho on [lo, hi] where p_n is
// increasing. Returns the midpoint of a final bracket of width <= 2 tol
// (or a few ulps when tol is below the floating-point resolution).
SolveResult refine_root(int n, const PolyEval& rho, double lo, double hi, double tol) {
    SolveResult r;
    r.mode = SolveMode::numeric;

    const auto sign_at = [&](double x) { return compare(eval_p(n, x), rho); };

    if (sign_at(lo) >= 0) {
        hi = lo;
    } else if (sign_at(hi) <= 0) {
        lo = hi;
    }

    double x = 0.5 * (lo + hi);
    int it = 0;
    while (hi - lo > 2.0 * tol && it < kMaxIterations) {
        ++it;
        const auto [p, dp] = eval_p_with_derivative(n, x);
        const PolyEval g = p - rho;
        if (g.is_zero()) {
            lo = hi = x;
            break;
        }
        (g.sign() < 0 ? lo : hi) = x;
        if (hi - lo <= 2.0 * tol) {
            break;
        }

        const double step = ratio(g, dp);
        double next = x - step;
        if (!std::isfinite(next) || next <= lo || next >= hi) {
            next = 0.5 * (lo + hi);
        } else if (std::abs(step) < 0.25 * tol) {
            // Newton has converged; certify with two probes around it.
            const double left = std::max(lo, next - 0.5 * tol);
            const double right = std::min(hi, next + 0.5 * tol);
            if (left > lo) {
                (sign_at(left) < 0 ? lo : hi) = left;
            }
            if (right < hi) {
                (sign_at(right) < 0 ? lo : hi) = right;
            }
            next = 0.5 * (lo + hi);
        }
        if (next == x || next <= lo || next >= hi) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) {
                break;  // bracket is down to adjacent doubles
            }
            next = mid;
        }
        x = next;
    }

    r.a0 = 0.5 * (lo + hi);
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    r.bracket_width = hi - lo;
    r.iterations = it;
    fill_residual(r, n, rho);
    return r;
}

void check_index(int n) {
    if (n < 0) {
        throw InvalidInput("polynomial index must be non-negative");
    }
}

void check_rho(const PolyEval& rho) {
    if (!(rho >= PolyEval::from_double(1.0))) {
        throw InvalidInput("rho must be at least 1");
    }
}

void check_bracket(int n, const PolyEval& rho) {
    if (!in_solving_bracket(n, rho)) {
        throw InvalidInput("rho = 2^" + std::to_string(rho.log2_abs()) +
                           " is outside [p_n(alpha_{n+1}), p_n(alpha_{n+2})) for n = " +
                           std::to_string(n));
    }
}

}  // namespace

std::string_view to_string(SolveMode mode) {
    switch (mode) {
        case SolveMode::exact:
            return "exact";
        case SolveMode::limit_approx:
            return "limit_approx";
        case SolveMode::numeric:
            return "numeric";
    }
    return "unknown";
}

bool in_solving_bracket(int n, const PolyEval& rho) {
    check_index(n);
    const PolyEval lower = p_at_alpha(n) * (1.0 - kBracketSlack);
    const PolyEval upper = p_at_alpha_next(n) * (1.0 + kBracketSlack);
    return lower <= rho && rho <= upper;
}

double largest_real_root_cubic(double c2, double c1, double c0) {
    // x = t - c2/3 gives t^3 + p t + q = 0.
    const double shift = c2 / 3.0;
    const double p = c1 - c2 * c2 / 3.0;
    const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
    const double disc = 0.25 * q * q + p * p * p / 27.0;
    double t = 0.0;
    if (disc > 0.0) {
        const double s = std::sqrt(disc);
        t = std::cbrt(-0.5 * q + s) + std::cbrt(-0.5 * q - s);
    } else if (p == 0.0) {
        t = std::cbrt(-q);
    } else {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        t = m * std::cos(std::acos(arg) / 3.0);
    }
    return t - shift;
}

double largest_real_root_quartic(double c3, double c2, double c1, double c0) {
    // x = y - c3/4 gives y^4 + p y^2 + q y + r = 0.
    const double shift = c3 / 4.0;
    const double c3sq = c3 * c3;
    const double p = c2 - 3.0 * c3sq / 8.0;
    const double q = c1 - c3 * c2 / 2.0 + c3sq * c3 / 8.0;
    const double r = c0 - c3 * c1 / 4.0 + c3sq * c2 / 16.0 - 3.0 * c3sq * c3sq / 256.0;

    double best = -std::numeric_limits<double>::infinity();
    const auto take_quadratic = [&best](double b, double c) {
        const double disc = b * b - 4.0 * c;
        if (disc >= 0.0) {
            best = std::max(best, 0.5 * (-b + std::sqrt(disc)));
        }
    };

    if (q == 0.0) {
        // Biquadratic: y^2 = z with z^2 + p z + r = 0.
        const double disc = p * p - 4.0 * r;
        if (disc >= 0.0) {
            const double z = 0.5 * (-p + std::sqrt(disc));
            if (z >= 0.0) {
                best = std::sqrt(z);
            }
        }
    } else {
        // Resolvent 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2 = 0 has a root m > 0.
        const double m = largest_real_root_cubic(p, 0.25 * p * p - r, -0.125 * q * q);
        const double s = std::sqrt(2.0 * m);
        take_quadratic(-s, 0.5 * p + m + q / (2.0 * s));
        take_quadratic(s, 0.5 * p + m - q / (2.0 * s));
    }
    if (!std::isfinite(best)) {
        throw InvalidInput("quartic has no real root");
    }
    return best - shift;
}

SolveResult solve_exact(int n, double rho) {
    if (n < 0 || n > 3) {
        throw InvalidInput("exact solution by radicals requires 0 <= n <= 3");
    }
    const PolyEval rho_e = PolyEval::from_double(rho);
    check_rho(rho_e);
    check_bracket(n, rho_e);

    SolveResult r;
    r.mode = SolveMode::exact;
    switch (n) {
        case 0:
            r.a0 = rho;
            break;
        case 1:
            r.a0 = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * rho));
            break;
        case 2: {
            // x^3 - 2x^2 = rho, one real root for rho > 0.
            const double c = std::cbrt(8.0 + 13.5 * rho +
                                       1.5 * std::sqrt(3.0) * std::sqrt(rho * (32.0 + 27.0 * rho)));
            r.a0 = (2.0 + 4.0 / c + c) / 3.0;
            break;
        }
        default:
            // x^4 - 3x^3 + x^2 - rho = 0.
            r.a0 = largest_real_root_quartic(-3.0, 1.0, 0.0, -rho);
            break;
    }
    r.bracket_lo = r.bracket_hi = r.a0;
    fill_residual(r, n, rho_e);
    return r;
}

SolveResult solve_numeric(int n, const PolyEval& rho, double tol_a0) {
    check_index(n);
    if (!(tol_a0 > 0.0)) {
        throw InvalidInput("tolerance must be positive");
    }
    check_rho(rho);
    check_bracket(n, rho);
    return refine_root(n, rho, alpha(n + 1), alpha(n + 2), tol_a0);
}

SolveResult solve_numeric(int n, double rho, double tol_a0) {
    return solve_numeric(n, PolyEval::from_double(rho), tol_a0);
}

SolveResult solve_limit(int n, std::optional<PolyEval> rho) {
    check_index(n);
    SolveResult r;
    r.mode = SolveMode::limit_approx;
    r.a0 = alpha(n + 2);
    r.bracket_lo = alpha(n + 1);
    r.bracket_hi = r.a0;
    r.bracket_width = r.bracket_hi - r.bracket_lo;
    if (rho) {
        fill_residual(r, n, *rho);
    }
    return r;
}

SolveResult solve_largest_root(int n, const PolyEval& rho, double tol_a0) {
    check_index(n);
    if (!(tol_a0 > 0.0)) {
        throw InvalidInput("tolerance must be positive");
    }
    check_rho(rho);
    // p_n is increasing on [alpha_n, inf) and p_n(alpha_n) = 0 < rho.
    const double lo = alpha(n);
    double hi = 4.0;
    while (eval_p(n, hi) < rho) {
        hi *= 2.0;
        if (!std::isfinite(hi)) {
            throw InvalidInput("no root of p_n(x) = rho within the double range");
        }
    }
    return refine_root(n, rho, lo, hi, tol_a0);
}

double limit_error_bound(int n) {
    const double d = n + 4.0;
    return 343.0 / (d * d * d);
}

double limit_threshold(double eps) {
    if (!(eps > 0.0)) {
        throw InvalidInput("tolerance must be positive");
    }
    return 7.0 * std::cbrt(1.0 / eps) - 4.0;
}

}  // namespace linesearch
