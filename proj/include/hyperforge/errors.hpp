#pragma once

#include <stdexcept>
#include <string>

namespace hyperforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured size or step bound would be exceeded.
class BoundError : public Error {
public:
    using Error::Error;
};

/// Input tables or files do not describe a well-formed object.
class MalformedError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace hyperforge
