#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace levi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent caller input (unknown vertex, bad parameter).
class InputError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Input is well formed but the operation cannot handle it
/// (count-only dataset passed to the Levi builder, complete graph for kappa).
class UnsupportedInputError : public Error {
public:
    using Error::Error;
};

/// An exact computation refused to run because a configured cap was exceeded.
class ResourceLimitError : public Error {
public:
    ResourceLimitError(const std::string& what, std::size_t cap)
        : Error(what), cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

/// A search that is guaranteed to succeed on valid data came back empty.
class InternalInconsistencyError : public Error {
public:
    using Error::Error;
};

/// Arrangement document could not be parsed. Line and column are 1-based
/// for syntax errors and 0 for schema errors that have no single location.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what), line_(0), column_(0) {}
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace levi
