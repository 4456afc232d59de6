#pragma once

#include <stdexcept>
#include <string>

namespace autobasis {

/// Malformed or inconsistent input (bad digit, base mismatch, syntax).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A configured resource guard (state budget, depth limit) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text-format error carrying a 1-based source position.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                     message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace autobasis
