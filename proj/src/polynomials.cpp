#include "linesearch/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "linesearch/errors.hpp"

namespace linesearch {

namespace {

// Splits v into m * 2^e with |m| in [1, 2).
PolyEval normalize(double v, std::int64_t e) {
    if (v == 0.0 || !std::isfinite(v)) {
        return {v == 0.0 ? 0.0 : v, 0};
    }
    int k = 0;
    const double m = std::frexp(v, &k);  // |m| in [0.5, 1)
    return {m * 2.0, e + k - 1};
}

void check_index(int n) {
    if (n < 0) {
        throw InvalidInput("polynomial index must be non-negative");
    }
}

// Divides every entry by the power of two that brings the largest magnitude
// into [1, 2), accumulating the shift in exp2.
template <std::size_t N>
void rescale(double (&vals)[N], std::int64_t& exp2) {
    double big = 0.0;
    for (double v : vals) {
        big = std::max(big, std::abs(v));
    }
    if (big == 0.0) {
        return;
    }
    int k = 0;
    std::frexp(big, &k);
    const int shift = k - 1;
    if (shift == 0) {
        return;
    }
    for (double& v : vals) {
        v = std::ldexp(v, -shift);
    }
    exp2 += shift;
}

}  // namespace

PolyEval PolyEval::from_double(double value) { return normalize(value, 0); }

PolyEval PolyEval::pow2(std::int64_t e) { return {1.0, e}; }

PolyEval PolyEval::from_log2(double log2_value) {
    if (log2_value == -std::numeric_limits<double>::infinity()) {
        return {};
    }
    const double whole = std::floor(log2_value);
    return normalize(std::exp2(log2_value - whole), static_cast<std::int64_t>(whole));
}

double PolyEval::value() const {
    if (mantissa == 0.0) {
        return 0.0;
    }
    if (exp2 > 2000) {
        return std::copysign(std::numeric_limits<double>::infinity(), mantissa);
    }
    if (exp2 < -2000) {
        return std::copysign(0.0, mantissa);
    }
    return std::ldexp(mantissa, static_cast<int>(exp2));
}

double PolyEval::log2_abs() const {
    if (mantissa == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return std::log2(std::abs(mantissa)) + static_cast<double>(exp2);
}

PolyEval operator*(const PolyEval& a, const PolyEval& b) {
    return normalize(a.mantissa * b.mantissa, a.exp2 + b.exp2);
}

PolyEval operator*(const PolyEval& a, double b) { return a * PolyEval::from_double(b); }

PolyEval operator+(const PolyEval& a, const PolyEval& b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    const std::int64_t top = std::max(a.exp2, b.exp2);
    // Shifts beyond the double mantissa width contribute nothing.
    const auto aligned = [top](const PolyEval& v) {
        const std::int64_t d = v.exp2 - top;
        return d < -1100 ? 0.0 : std::ldexp(v.mantissa, static_cast<int>(d));
    };
    return normalize(aligned(a) + aligned(b), top);
}

PolyEval operator-(const PolyEval& a, const PolyEval& b) { return a + (-b); }

double ratio(const PolyEval& num, const PolyEval& den) {
    if (den.is_zero()) {
        return num.is_zero() ? std::numeric_limits<double>::quiet_NaN()
                             : std::copysign(std::numeric_limits<double>::infinity(),
                                             num.mantissa * den.mantissa);
    }
    const std::int64_t e = num.exp2 - den.exp2;
    const double m = num.mantissa / den.mantissa;
    if (e > 2000) {
        return std::copysign(std::numeric_limits<double>::infinity(), m);
    }
    if (e < -2000) {
        return std::copysign(0.0, m);
    }
    return std::ldexp(m, static_cast<int>(e));
}

int compare(const PolyEval& a, const PolyEval& b) {
    const PolyEval d = a - b;
    return d.sign();
}

PolyEval eval_p(int n, double x) {
    return eval_p_with_derivative(n, x).value;
}

PolyEvalWithDerivative eval_p_with_derivative(int n, double x) {
    check_index(n);
    if (n == 0) {
        return {PolyEval::from_double(x), PolyEval::from_double(1.0)};
    }
    // {p_{i-2}, p_{i-1}, p'_{i-2}, p'_{i-1}} share one exponent; the system is
    // linear and homogeneous in these four values, so rescaling by a power of
    // two is exact.
    double s[4] = {x, x * (x - 1.0), 1.0, 2.0 * x - 1.0};
    std::int64_t exp2 = 0;
    rescale(s, exp2);
    for (int i = 2; i <= n; ++i) {
        const double diff = s[1] - s[0];
        const double p = x * diff;
        const double dp = diff + x * (s[3] - s[2]);
        s[0] = s[1];
        s[1] = p;
        s[2] = s[3];
        s[3] = dp;
        rescale(s, exp2);
    }
    return {normalize(s[1], exp2), normalize(s[3], exp2)};
}

double alpha(int n) {
    check_index(n);
    const double c = std::cos(std::numbers::pi / (n + 2));
    return 4.0 * c * c;
}

PolyEval p_at_alpha(int n) {
    check_index(n);
    return PolyEval::from_log2(0.5 * (n + 1) * std::log2(alpha(n + 1)));
}

PolyEval p_at_alpha_next(int n) {
    check_index(n);
    return PolyEval::from_log2(0.5 * (n + 2) * std::log2(alpha(n + 2)));
}

std::vector<double> roots_of_p(int n) {
    check_index(n);
    std::vector<double> roots(static_cast<std::size_t>((n + 1) / 2), 0.0);
    for (int k = 1; k <= (n + 2) / 2; ++k) {
        if (2 * k == n + 2) {
            roots.push_back(0.0);
            continue;
        }
        const double c = std::cos(k * std::numbers::pi / (n + 2));
        roots.push_back(4.0 * c * c);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace linesearch
