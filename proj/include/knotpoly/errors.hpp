#pragma once

#include <stdexcept>
#include <string>

namespace knotpoly {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A long division left a nonzero remainder (or a non-integral coefficient quotient).
class not_divisible : public error {
public:
    using error::error;
};

/// No Laurent polynomial on the half-exponent lattice squares to the input.
class not_perfect_square : public error {
public:
    using error::error;
};

/// Evaluation point outside the domain of the requested evaluation path.
class domain_error : public error {
public:
    using error::error;
};

/// Arguments violate an operation's precondition (parity, coprimality, sign).
class invalid_input : public error {
public:
    using error::error;
};

/// A fractional q-bracket denominator does not divide the base exponent.
class invalid_base : public error {
public:
    using error::error;
};

}  // namespace knotpoly
