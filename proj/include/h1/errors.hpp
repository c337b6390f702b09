#pragma once

#include <stdexcept>
#include <string>

namespace h1 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Quantum number outside the bound-state range of a model.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Model parameters violate a construction invariant.
class ModelError : public Error {
public:
    using Error::Error;
};

/// An internal invariant was breached (e.g. a non-positive Gamma argument).
class InternalError : public Error {
public:
    using Error::Error;
};

/// Iterative numerical procedure failed to meet its stopping criterion.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

} // namespace h1
