#pragma once

#include <stdexcept>
#include <string>

namespace permutiple {

// Input text could not be parsed. `column` is the zero-based offset of the
// offending character in the input string.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t column)
        : std::runtime_error(what + " (column " + std::to_string(column) + ")"),
          column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

// Two objects that must share a length do not.
class size_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A documented precondition was violated by the caller.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A value does not fit in the requested digit width.
class value_overflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace permutiple
