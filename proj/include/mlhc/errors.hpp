#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlhc {

/// Input outside an operation's domain (non-Dyck word, wrong weight, ...).
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested instance exceeds the configured size cap.
class size_limit_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A structural invariant of the construction failed. Never expected; signals a bug.
class structural_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not line-oriented.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mlhc
