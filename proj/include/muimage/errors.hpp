#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace muimage {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Exact polynomial division was requested but the divisor does not divide.
class NotDivisible : public Error {
public:
    explicit NotDivisible(const std::string& what) : Error(what) {}
};

// Raised by the polynomial parser; carries the 0-based offset of the first
// offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Invalid input data: bad gradings, out-of-range dimensions, malformed
// sample files, inapplicable operations.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace muimage
