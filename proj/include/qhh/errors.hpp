#pragma once

#include <stdexcept>
#include <string>

namespace qhh {

// Exit codes used by the CLI: 1 parse/validation error, 2 infinite-dimensional
// algebra, 3 internal cross-check failure.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line_, int column_)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

struct ValidationError : Error {
  using Error::Error;
};

struct InfiniteDimensionalError : Error {
  using Error::Error;
};

// Two routes to the same number disagreed.  Always an implementation bug,
// never a user error.
struct CrossCheckError : Error {
  using Error::Error;
};

// An operation was applied outside its stated domain (rotating a non-cycle,
// materializing psi for a non-neat class).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace qhh
