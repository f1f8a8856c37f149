#pragma once

#include <stdexcept>
#include <string>

namespace linesearch {

/// Input outside an operation's domain (negative index, rho < 1, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Target lies beyond every distance the strategy ever reaches.
class Unreachable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Strategy does not reach Lambda on both sides.
class IncompleteStrategy : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A ratio budget of 9 or more admits arbitrarily large Lambda.
class UnboundedReach : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// (a, b) violates the feasibility condition of the m-ray family. Carries the
/// admissible b-interval for the given (m, a); the interval is empty when
/// b_min > b_max.
class InfeasibleParameters : public std::domain_error {
public:
    InfeasibleParameters(const std::string& what, double b_min, double b_max)
        : std::domain_error(what), b_min_(b_min), b_max_(b_max) {}

    double b_min() const { return b_min_; }
    double b_max() const { return b_max_; }

private:
    double b_min_;
    double b_max_;
};

}  // namespace linesearch
