#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cicy {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: mismatched ambients, ragged rows, bad arguments.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The operation is defined, but not for this input (e.g. block-diagonal input to the web).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A recursion reached a case with no known rule.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// An invariant that the algorithms guarantee was violated.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public InvalidArgument {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : InvalidArgument("line " + std::to_string(line) + ", column " + std::to_string(column) +
                          ": " + what),
          line_(line),
          column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace cicy
