#pragma once

#include <cstdint>
#include <vector>

namespace linesearch {

/// Real value carried as mantissa * 2^exp2 so that p_n(x) stays representable
/// for n far beyond the double exponent range.
///
/// Normalized form: mantissa is 0 or |mantissa| in [1, 2).
struct PolyEval {
    double mantissa = 0.0;
    std::int64_t exp2 = 0;

    static PolyEval from_double(double value);
    /// Exact power of two, 2^e.
    static PolyEval pow2(std::int64_t e);
    /// Builds a positive value from its base-2 logarithm.
    static PolyEval from_log2(double log2_value);

    bool is_zero() const { return mantissa == 0.0; }
    int sign() const { return (mantissa > 0.0) - (mantissa < 0.0); }

    /// Plain double; saturates to +-inf or 0 outside the double range.
    double value() const;
    /// log2 |value|; -inf for zero.
    double log2_abs() const;

    PolyEval operator-() const { return {-mantissa, exp2}; }
    friend PolyEval operator*(const PolyEval& a, const PolyEval& b);
    friend PolyEval operator*(const PolyEval& a, double b);
    friend PolyEval operator+(const PolyEval& a, const PolyEval& b);
    friend PolyEval operator-(const PolyEval& a, const PolyEval& b);
    /// Quotient as a plain double (saturating).
    friend double ratio(const PolyEval& num, const PolyEval& den);
    /// Three-way comparison by value: -1, 0, 1.
    friend int compare(const PolyEval& a, const PolyEval& b);

    friend bool operator<(const PolyEval& a, const PolyEval& b) { return compare(a, b) < 0; }
    friend bool operator<=(const PolyEval& a, const PolyEval& b) { return compare(a, b) <= 0; }
    friend bool operator>(const PolyEval& a, const PolyEval& b) { return compare(a, b) > 0; }
    friend bool operator>=(const PolyEval& a, const PolyEval& b) { return compare(a, b) >= 0; }
    friend bool operator==(const PolyEval& a, const PolyEval& b) { return compare(a, b) == 0; }
};

/// p_n(x) and its derivative p_n'(x), sharing no exponent.
struct PolyEvalWithDerivative {
    PolyEval value;
    PolyEval derivative;
};

/// p_n(x) from p_0 = x, p_1 = x(x-1), p_i = x(p_{i-1} - p_{i-2}).
PolyEval eval_p(int n, double x);

/// p_n(x) together with p_n'(x) from the differentiated recurrence.
PolyEvalWithDerivative eval_p_with_derivative(int n, double x);

/// Largest real root of p_n: 4 cos^2(pi / (n + 2)).
double alpha(int n);

/// p_n(alpha_{n+1}) = alpha_{n+1}^{(n+1)/2}, closed form.
PolyEval p_at_alpha(int n);

/// p_n(alpha_{n+2}) = alpha_{n+2}^{(n+2)/2}, closed form.
PolyEval p_at_alpha_next(int n);

/// All n+1 real roots of p_n in ascending order, from the closed-form
/// factorization (zero has multiplicity floor((n+1)/2)).
std::vector<double> roots_of_p(int n);

}  // namespace linesearch
