#include "linesearch/mrays.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "linesearch/errors.hpp"

namespace linesearch {

namespace {

constexpr std::size_t kMaxSearchIterations = 1u << 20;
constexpr std::size_t kMaxHorizon = 10000;

void check_m(int m) {
    if (m < 2) {
        throw InvalidInput("ray count must be at least 2");
    }
}

std::size_t first_reaching(const SequenceFn& f, double d) {
    for (std::size_t j = 0; j < kMaxSearchIterations; ++j) {
        if (f(j) >= d) {
            return j;
        }
    }
    throw Unreachable("target at " + std::to_string(d) + " is never reached");
}

double family_value(const RayFamilyParams& p, std::size_t i) {
    const double q = static_cast<double>(p.m) / (p.m - 1);
    return (p.a * static_cast<double>(i) + p.b) * std::pow(q, static_cast<double>(i)) * p.lambda;
}

}  // namespace

bool BInterval::contains(double b, double rel_tol) const {
    const double slack = rel_tol * std::max({1.0, std::abs(lo), std::abs(hi)});
    return !empty() && b >= lo - slack && b <= hi + slack;
}

double ray_constant(int m) {
    check_m(m);
    return std::pow(static_cast<double>(m), m) / std::pow(static_cast<double>(m - 1), m - 1);
}

double mray_ratio_bound(int m) { return 1.0 + 2.0 * ray_constant(m); }

double mray_known_distance_ratio(int m) {
    check_m(m);
    return 1.0 + 2.0 * (m - 1);
}

BInterval feasible_b_interval(int m, double a) {
    const double k = ray_constant(m);
    const double md = m;
    BInterval out;
    out.lo = std::max(1.0, md * a);
    out.hi = ((k - md * md) * a + md / (md - 1.0) * k) / (k - md);
    if (a < 0.0) {
        out.lo = 1.0;
        out.hi = 0.0;
    }
    return out;
}

void validate(const RayFamilyParams& params) {
    check_m(params.m);
    if (!(params.lambda > 0.0)) {
        throw InvalidInput("lambda must be positive");
    }
    const BInterval range = feasible_b_interval(params.m, params.a);
    if (!range.contains(params.b)) {
        throw InfeasibleParameters(
            "b = " + std::to_string(params.b) + " outside the feasible interval [" +
                std::to_string(range.lo) + ", " + std::to_string(range.hi) + "] for m = " +
                std::to_string(params.m) + ", a = " + std::to_string(params.a),
            range.lo, range.hi);
    }
}

std::vector<double> family_values(const RayFamilyParams& params, std::size_t count) {
    check_m(params.m);
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = family_value(params, i);
    }
    return out;
}

std::vector<double> family_strategy(const RayFamilyParams& params, std::size_t count) {
    if (count < 1) {
        throw InvalidInput("count must be at least 1");
    }
    validate(params);
    return family_values(params, count);
}

double mray_cost(const SequenceFn& f, int m, const TargetSpec& target) {
    check_m(m);
    if (!(target.distance > 0.0)) {
        throw InvalidInput("target distance must be positive");
    }
    const std::size_t last = first_reaching(f, target.distance) + static_cast<std::size_t>(m) - 2;
    double sum = 0.0;
    for (std::size_t i = 0; i <= last; ++i) {
        sum += f(i);
    }
    return 2.0 * sum + target.distance;
}

double mray_walk_cost(const SequenceFn& f, int m, const TargetSpec& target) {
    check_m(m);
    if (target.side < 0 || target.side >= m) {
        throw InvalidInput("ray index out of range");
    }
    double walked = 0.0;
    for (std::size_t i = 0; i < kMaxSearchIterations; ++i) {
        const double t = f(i);
        if (static_cast<int>(i % static_cast<std::size_t>(m)) == target.side &&
            t >= target.distance) {
            return walked + target.distance;
        }
        walked += 2.0 * t;
    }
    throw Unreachable("target is never reached on its ray");
}

MrayRatioReport mray_breakpoint_ratios(std::span<const double> values, int m, double lambda,
                                       std::size_t horizon) {
    check_m(m);
    const std::size_t need = horizon + static_cast<std::size_t>(m) - 1;
    if (values.size() < need) {
        throw InvalidInput("need " + std::to_string(need) + " values for horizon " +
                           std::to_string(horizon));
    }
    MrayRatioReport r;
    r.horizon = horizon;
    r.bound = mray_ratio_bound(m);
    r.lower_bound = mray_known_distance_ratio(m);
    r.first_turn_below_lambda = values[0] < lambda;

    // prefix[k] = sum of values[0..k-1]
    std::vector<double> prefix(need + 1, 0.0);
    for (std::size_t i = 0; i < need; ++i) {
        prefix[i + 1] = prefix[i] + values[i];
    }
    const auto m_sz = static_cast<std::size_t>(m);

    // D in [lambda, f(0)]: the first m-1 rays are walked in full.
    const double head = 2.0 * prefix[m_sz - 1];
    r.sup_per_breakpoint.push_back(1.0 + head / lambda);
    r.inf_per_breakpoint.push_back(1.0 + head / values[0]);
    // D in (f(j), f(j+1)]: iterations 0 .. j+m-1 are walked in full.
    for (std::size_t j = 0; j < horizon; ++j) {
        const double walked = 2.0 * prefix[j + m_sz];
        r.sup_per_breakpoint.push_back(1.0 + walked / values[j]);
        r.inf_per_breakpoint.push_back(1.0 + walked / values[j + 1]);
    }
    r.sup_ratio = *std::max_element(r.sup_per_breakpoint.begin(), r.sup_per_breakpoint.end());
    r.residual = r.bound - r.sup_ratio;
    return r;
}

std::size_t default_horizon(const RayFamilyParams& params) {
    check_m(params.m);
    const double q = static_cast<double>(params.m) / (params.m - 1);
    const double target = 1e-6 * mray_ratio_bound(params.m);
    const double excess = 2.0 * (params.m - 1) * std::abs(params.b - params.m * params.a);
    std::size_t h = static_cast<std::size_t>(params.m);
    while (h < kMaxHorizon &&
           excess / ((params.a * static_cast<double>(h) + params.b) *
                     std::pow(q, static_cast<double>(h))) >
               target) {
        ++h;
    }
    // The last breakpoint examined is f(horizon - 1).
    return h + 1;
}

MrayRatioReport mray_worst_ratio(const RayFamilyParams& params, std::size_t horizon) {
    validate(params);
    if (horizon < static_cast<std::size_t>(params.m)) {
        throw InvalidInput("horizon must be at least m");
    }
    const auto values = family_values(params, horizon + static_cast<std::size_t>(params.m) - 1);
    return mray_breakpoint_ratios(values, params.m, params.lambda, horizon);
}

double multi_p(int n, std::span<const double> point, int m) {
    check_m(m);
    if (n < 0) {
        throw InvalidInput("polynomial index must be non-negative");
    }
    if (point.size() != static_cast<std::size_t>(m - 1)) {
        throw InvalidInput("point must have m - 1 = " + std::to_string(m - 1) + " coordinates");
    }
    double norm = 0.0;
    for (double x : point) {
        norm += x;
    }
    std::vector<double> p;
    p.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        if (k <= m - 2) {
            p.push_back(point[static_cast<std::size_t>(k)]);
        } else if (k == m - 1) {
            p.push_back(norm * (point[0] - 1.0));
        } else {
            p.push_back(norm * (p[static_cast<std::size_t>(k - (m - 1))] -
                                p[static_cast<std::size_t>(k - m)]));
        }
    }
    return p.back();
}

std::optional<std::vector<double>> alpha_table(int m, int n) {
    if (m < 2 || m > 5 || n < 0 || n > 6) {
        return std::nullopt;
    }
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);
    const double s5 = std::sqrt(5.0);
    const double s6 = std::sqrt(6.0);
    const double s13 = std::sqrt(13.0);
    const double s21 = std::sqrt(21.0);
    using V = std::vector<double>;
    switch (m) {
        case 2: {
            if (n == 5) {
                // (5 + 7^(2/3) / (w/2)^(1/3) + (7w/2)^(1/3)) / 3, w = 1 + 3i sqrt(3),
                // principal cube roots.
                const std::complex<double> w(1.0, 3.0 * s3);
                const std::complex<double> v =
                    (5.0 + std::pow(7.0, 2.0 / 3.0) / std::pow(0.5 * w, 1.0 / 3.0) +
                     std::pow(3.5 * w, 1.0 / 3.0)) /
                    3.0;
                return V{v.real()};
            }
            const double col[] = {0.0, 1.0, 2.0, 0.5 * (3.0 + s5), 3.0, 0.0, 2.0 + s2};
            return V{col[n]};
        }
        case 3: {
            switch (n) {
                case 0:
                case 1:
                    return V{0.0, 0.0};
                case 2:
                    return V{1.0, 1.0};
                case 3:
                    return V{1.5, 1.5};
                case 4:
                    return V{(3.0 + s3) / 3.0, (3.0 + 2.0 * s3) / 3.0};
                case 5:
                    return V{(7.0 + s13) / 6.0, (4.0 + s13) / 3.0};
                default:
                    return V{(15.0 + 3.0 * s3) / 11.0, (18.0 + 8.0 * s3) / 11.0};
            }
        }
        case 4: {
            switch (n) {
                case 0:
                case 1:
                case 2:
                    return V(3, 0.0);
                case 3:
                    return V(3, 1.0);
                case 4:
                    return V(3, 4.0 / 3.0);
                case 5:
                    return V{(9.0 + s21) / 10.0, (4.0 + s21) / 5.0, (4.0 + s21) / 5.0};
                default:
                    return V{(6.0 + s6) / 6.0, (3.0 + s6) / 3.0, (2.0 + s6) / 2.0};
            }
        }
        default: {
            switch (n) {
                case 4:
                    return V(4, 1.0);
                case 5:
                    return V(4, 1.25);
                case 6: {
                    const double tail = (5.0 + 4.0 * s2) / 7.0;
                    return V{(6.0 + 2.0 * s2) / 7.0, tail, tail, tail};
                }
                default:
                    return V(4, 0.0);
            }
        }
    }
}

AlphaCheck check_alpha_table(int m, int n, double tol) {
    AlphaCheck out;
    const auto point = alpha_table(m, n);
    if (!point) {
        return out;
    }
    out.ordered = point->front() >= 0.0 && std::is_sorted(point->begin(), point->end());
    for (int k = n; k <= n + m - 2; ++k) {
        out.max_residual = std::max(out.max_residual, std::abs(multi_p(k, *point, m)));
    }
    out.ok = out.ordered && out.max_residual <= tol;
    return out;
}

bool verify_alpha_table(int m, int n) { return check_alpha_table(m, n).ok; }

RayFamilyParams mray_f_infinity_params(int m, double lambda) {
    check_m(m);
    const double d = m - 1.0;
    return {m, m / (d * d), static_cast<double>(m) * m / (d * d), lambda};
}

FixedPointCheck check_f_infinity_fixed_point(int m, int n, double tol) {
    const RayFamilyParams params = mray_f_infinity_params(m);
    validate(params);
    const auto values =
        family_values(params, std::max(static_cast<std::size_t>(n) + 1,
                                       static_cast<std::size_t>(m - 1)));
    FixedPointCheck out;
    out.lhs = multi_p(n, std::span<const double>(values.data(), static_cast<std::size_t>(m - 1)),
                      m);
    out.rhs = values[static_cast<std::size_t>(n)];
    out.rel_error = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
    out.ok = out.rel_error <= tol;
    return out;
}

bool f_infinity_fixed_point(int m, int n) { return check_f_infinity_fixed_point(m, n).ok; }

}  // namespace linesearch
