#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schurlab {

/// Root of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad dimensions, unknown names, invalid algebra).
class InputError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class SingularMatrix : public InputError {
public:
    using InputError::InputError;
};

class JacobiViolation : public InputError {
public:
    JacobiViolation(std::size_t i, std::size_t j, std::size_t k, std::string residual)
        : InputError("Jacobi identity fails on basis triple (x" + std::to_string(i + 1) + ",x" +
                     std::to_string(j + 1) + ",x" + std::to_string(k + 1) +
                     "), residual " + residual),
          i_(i), j_(j), k_(k), residual_(std::move(residual)) {}

    // 0-based basis indices of the offending triple.
    std::size_t i() const noexcept { return i_; }
    std::size_t j() const noexcept { return j_; }
    std::size_t k() const noexcept { return k_; }
    const std::string& residual() const noexcept { return residual_; }

private:
    std::size_t i_, j_, k_;
    std::string residual_;
};

class NotNilpotent : public InputError {
public:
    using InputError::InputError;
};

class NotAnIdeal : public InputError {
public:
    using InputError::InputError;
};

class NotCentral : public InputError {
public:
    using InputError::InputError;
};

class NotOneDimensional : public InputError {
public:
    using InputError::InputError;
};

class InvalidBoundInputs : public InputError {
public:
    using InputError::InputError;
};

class ClassTooSmall : public InputError {
public:
    using InputError::InputError;
};

class UnknownName : public InputError {
public:
    using InputError::InputError;
};

class MissingParameter : public InputError {
public:
    using InputError::InputError;
};

class InvariantMismatch : public InputError {
public:
    using InputError::InputError;
};

/// DSL syntax error; line and column are 1-based.
class SyntaxError : public InputError {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& what)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_, column_;
};

class UnknownGenerator : public InputError {
public:
    using InputError::InputError;
};

class DuplicateInconsistentBracket : public InputError {
public:
    using InputError::InputError;
};

/// A computation would exceed a configured size cap (free algebras grow exponentially).
class ResourceLimit : public Error {
public:
    using Error::Error;
};

} // namespace schurlab
