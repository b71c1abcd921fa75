#pragma once

#include <stdexcept>
#include <string>

namespace isotype {

// Base class for all failures raised by the library. The CLI converts these
// into error-status reports; library code throws and never prints.
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed input text (scalar syntax, spec files). Carries a best-effort
// source location when one is known.
struct ParseError : Error {
  std::string path; // JSON path or token context
  long line = -1, column = -1;

  explicit ParseError(const std::string &msg) : Error(msg) {}
  ParseError(const std::string &msg, std::string path_, long line_, long col_)
      : Error(msg), path(std::move(path_)), line(line_), column(col_) {}
};

// Arithmetic between scalars of different ambient fields.
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string &msg) : Error(msg) {}
};

// An operation's stated precondition does not hold (non-idempotent element,
// uncertified algebra, singular operator, ...).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string &msg) : Error(msg) {}
};

} // namespace isotype
