#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motif {

// Malformed arguments: vertex ids out of range, wrong set sizes, bad pattern literals.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Model or search parameters outside their admissible range.
class parameter_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Power-law fit impossible (tail too small or degenerate).
class fit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Request refused because it would be quadratic (or worse) at the given size.
class refused_error : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace motif
