#pragma once

#include <stdexcept>
#include <string>

namespace cframe {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Degenerate interval, non-positive scale, frequency grid touching zero.
class InvalidDomain : public Error {
    using Error::Error;
};

/// Length or dimension mismatch, or operands living on different spaces.
class ShapeError : public Error {
    using Error::Error;
};

/// Out-of-range numeric parameter (p < 1, eps <= 0, empty schedule).
class InvalidParameter : public Error {
    using Error::Error;
};

class InfeasiblePartition : public Error {
    using Error::Error;
};

/// A decomposition did not converge or produced non-finite output.
class NumericFailure : public Error {
    using Error::Error;
};

/// A checked precondition on an operator (hermitian, orthonormal, commuting) failed.
class ContractViolation : public Error {
    using Error::Error;
};

class NotInvertible : public Error {
public:
    NotInvertible(const std::string& what, double smallest_singular_value)
        : Error(what), sigma_min_(smallest_singular_value) {}

    double smallest_singular_value() const noexcept { return sigma_min_; }

private:
    double sigma_min_;
};

/// Lower frame bound is numerically zero where a frame is required.
class NotAFrame : public Error {
    using Error::Error;
};

/// Zero window/vector, inadmissible wavelet, unusable input data.
class InvalidInput : public Error {
    using Error::Error;
};

/// Symbol value outside the admissible set (negative or complex weight).
class InvalidSymbol : public Error {
    using Error::Error;
};

}  // namespace cframe
