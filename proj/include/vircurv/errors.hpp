#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vircurv {

// Base of every error raised by the engine. The C API maps each subclass to
// its own status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input. `offset` is the 0-based character position.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : Error("parse error at offset " + std::to_string(offset) + ": " + expected),
          offset_(offset),
          expected_(expected) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// Input outside an operation's mathematical domain (zero denominator,
// a_0 component where only diff_0 is allowed, m + n = 0 in lambda, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// (c, h) fail theta positivity in the mode range a computation touches.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Bad invocation: unknown suite, max_mode < 1, ...
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace vircurv
