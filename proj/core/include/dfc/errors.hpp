#pragma once

#include <stdexcept>
#include <string>

namespace dfc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unsupported user input (bad JSON, bad flags, unsupported conditions).
class InputError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition on the input does not hold
/// (pole in [-1,1], vanishing leading coefficient, division by zero...).
class DomainError : public InputError {
public:
    using InputError::InputError;
};

/// The validation could not produce a bound. Never accompanied by a wrong bound.
class InconclusiveError : public Error {
public:
    using Error::Error;
};

/// The selection linear system stays singular after all retries.
class SingularSystemError : public Error {
public:
    using Error::Error;
};

/// Certified root refinement could not reach the requested accuracy.
class RefinementError : public Error {
public:
    using Error::Error;
};

/// An internal invariant was breached. Indicates a bug, not a user error.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace dfc
