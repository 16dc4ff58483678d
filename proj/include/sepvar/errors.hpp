#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepvar {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Operands live in different polynomial rings (different variables or order).
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation was violated by its arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised by the exact linear algebra when a matrix that must be invertible is not.
class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("singular matrix (determinant = 0)") {}
};

/// The variety of the ideal is empty, i.e. 1 lies in the ideal.
class EmptyVariety : public Error {
public:
    EmptyVariety() : Error("empty variety: the ideal contains 1") {}
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace sepvar
