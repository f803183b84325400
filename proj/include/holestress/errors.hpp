#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holestress {

// Precondition violated by the caller (bad sizes, empty intervals, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input data that cannot be used (non-finite or non-positive samples).
class InvalidData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Root bracketing, integral truncation and similar numerical breakdowns.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation of phi' or phi'' exactly at a corner where they are unbounded.
class SingularEvaluation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Nested quadrature ran out of bisections. The last accumulated estimate and
// the last whole-vs-halves gap are kept so callers may still use the value.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double estimate, double gap, int levels,
                     double estimate_imag = 0.0)
        : std::runtime_error(what),
          estimate_(estimate),
          estimate_imag_(estimate_imag),
          gap_(gap),
          levels_(levels) {}

    double estimate() const noexcept { return estimate_; }
    // Imaginary part of the estimate for complex integrands.
    double estimate_imag() const noexcept { return estimate_imag_; }
    double gap() const noexcept { return gap_; }
    int levels() const noexcept { return levels_; }

private:
    double estimate_;
    double estimate_imag_;
    double gap_;
    int levels_;
};

class RankDeficiency : public std::runtime_error {
public:
    RankDeficiency(const std::string& what, std::size_t column)
        : std::runtime_error(what), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

}  // namespace holestress
