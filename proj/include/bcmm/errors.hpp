#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcmm {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree on dimension, shape, or count.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A pattern set with no members was supplied where at least one is required.
class EmptySetError : public Error {
public:
    using Error::Error;
};

/// The operation needs state the object does not carry (e.g. preprocessed
/// recall on a memory trained without preprocessing).
class StateError : public Error {
public:
    using Error::Error;
};

/// Text input does not parse. The line number is 1-based and counts the
/// header line.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Binary input violates the container format (magic, version, length,
/// padding).
class FormatError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure (open, read, write).
class IoError : public Error {
public:
    using Error::Error;
};

/// A cross-check against the reference implementation (or a requested
/// verification pass) failed.
class VerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace bcmm
