#pragma once

#include <stdexcept>
#include <string>

namespace galt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("field mismatch: operands live over different fields") {}
    explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed user input (files, command-line values, names).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace galt
