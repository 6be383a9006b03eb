#pragma once

#include <stdexcept>
#include <string>

namespace pds {

// Malformed or inconsistent arguments (dimension mismatch, bad normal, ...).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters the operation is not defined for, e.g. a prime-only routine on
// a composite cycle length.
class UnsupportedParametersError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure in a code or family file; carries the 1-based line number.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pds
