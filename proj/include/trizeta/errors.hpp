#pragma once

#include <stdexcept>
#include <string>

namespace trizeta {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-square matrix, mismatched vector lengths, wrong arity.
struct DimensionError : Error {
    using Error::Error;
};

// Zero denominator, repeated Satake coordinates (a_{v_r} = 0), zero line.
struct SingularError : Error {
    using Error::Error;
};

// API misuse: mixed series variables, mismatched field contexts.
struct UsageError : Error {
    using Error::Error;
};

// Parameter outside the mathematical domain (r_i < 3, beta = 0, eps <= 0).
struct DomainError : Error {
    using Error::Error;
};

// Numeric evaluation point outside the convergence cone.
struct ConeError : Error {
    using Error::Error;
};

// An Euler factor with |gamma q^{-s}| >= 1; message names the index.
struct DivergenceError : Error {
    using Error::Error;
};

// Certified tail bound exceeds the requested tolerance.
struct TruncationError : Error {
    using Error::Error;
};

// Normalized denominator is not a unit monomial.  Must never fire on
// admissible inputs; firing would falsify the rationality statement.
struct PolynomialityError : Error {
    using Error::Error;
};

// Big-integer bit size exceeded the runaway guard (TRIZETA_MAX_RATIONAL_BITS).
struct RunawayError : Error {
    using Error::Error;
};

// Two internally computed routes to the same value disagree.
struct InternalIdentityError : Error {
    using Error::Error;
};

}  // namespace trizeta
