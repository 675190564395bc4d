#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sidon {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input (unparseable rational, bad schema).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A bound that must be strictly positive was not.
class InvalidBoundError : public Error {
public:
    using Error::Error;
};

/// Argument outside the operation's domain (index out of range, r > h, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// Two input positions hold the same value. Indices are 1-based.
class DuplicateElementError : public Error {
public:
    DuplicateElementError(std::size_t first, std::size_t second, const std::string& value)
        : Error("duplicate element " + value + " at indices " + std::to_string(first) + " and " +
                std::to_string(second)),
          first_(first),
          second_(second) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

class NotACollisionError : public Error {
public:
    using Error::Error;
};

class OrderMismatchError : public Error {
public:
    using Error::Error;
};

class InvalidPlanError : public Error {
public:
    using Error::Error;
};

class SamplerError : public Error {
public:
    using Error::Error;
};

class BudgetError : public Error {
public:
    using Error::Error;
};

}  // namespace sidon
