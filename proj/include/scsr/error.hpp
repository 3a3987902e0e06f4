// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scsr {

/// Base of every error thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An empty string was handed to a set that only admits nonempty strings.
class empty_string_error : public error {
 public:
  empty_string_error() : error("empty strings are not allowed") {}
};

/// An operation that needs at least one string was given none.
class empty_set_error : public error {
 public:
  explicit empty_set_error(const std::string& what_for)
    : error("empty string set passed to " + what_for)
  {}
};

/// The exhaustive oracle refuses instances above its member-count limit.
class size_limit_error : public error {
 public:
  size_limit_error(std::size_t count, std::size_t limit)
    : error(
        "instance has " + std::to_string(count)
        + " strings after normalization; the exact oracle limit is "
        + std::to_string(limit))
    , count_(count)
    , limit_(limit)
  {}

  std::size_t count() const noexcept { return count_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t count_;
  std::size_t limit_;
};

/// A string handed to an automaton query is not one of its patterns.
class unknown_string_error : public error {
 public:
  explicit unknown_string_error(const std::string& value)
    : error("string is not a member of the automaton: \"" + value + "\"")
  {}
};

/// A requested arc cannot occur on any semi-Hamiltonian path.
class unrealizable_arc_error : public error {
 public:
  using error::error;
};

/// A reserved separator symbol occurs in an input string.
class reserved_symbol_error : public error {
 public:
  using error::error;
};

/// Malformed input file: carries the offending line number.
class ingest_error : public error {
 public:
  ingest_error(const std::string& message, std::size_t line)
    : error(
        line == 0 ? message : "line " + std::to_string(line) + ": " + message)
    , line_(line)
  {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Bad command-line or generator parameters.
class usage_error : public error {
 public:
  using error::error;
};

/// Raised by checked runs when a structural invariant fails. Always a bug.
class invariant_violation : public error {
 public:
  using error::error;
};

/// Caller broke a documented precondition (programming error).
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

} // namespace scsr
