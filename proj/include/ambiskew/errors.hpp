#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ambiskew {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (expressions, JSON documents).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column)
    {
    }
    explicit ParseError(const std::string& message) : Error(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

// Well-formed input that violates a structural invariant (zero xi, bad
// grouplike data, mismatched rings, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A mathematically meaningful refusal: the requested computation falls
// outside the hypotheses it needs (torsion, N finite for Clebsch-Gordan, ...).
class MathRefusal : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public MathRefusal {
public:
    DivisionByZero() : MathRefusal("division by zero") {}
};

// An identity that the theory guarantees failed to hold.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace ambiskew
