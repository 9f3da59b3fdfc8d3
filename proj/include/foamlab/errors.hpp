#pragma once

#include <stdexcept>
#include <string>

namespace foamlab {

enum class ErrorKind {
    DivisionNotExact,
    WrongRing,
    IndexOutOfRange,
    NotInSymmetricSubring,
    TwoNotInvertible,
    Overflow,
    FlowViolation,
    InvalidWeb,
    PatternMismatch,
    BoundaryMismatch,
    BindingInconsistent,
    SeamSignInconsistent,
    OddEuler,
    NotPolynomial,
    NotSymmetric,
    NonHomogeneous,
    NonSphericalWithNu3,
    CharTwoNonSpherical,
    RankUnstable,
    NotWellDefined,
    SyntaxError,
    UnresolvedId,
    InvalidArgument,
};

const char* error_name(ErrorKind k);

// True for errors that signal a failed mathematical check rather than bad input.
bool is_math_failure(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg)
        : std::runtime_error(std::string(error_name(k)) + ": " + msg), kind_(k) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace foamlab
