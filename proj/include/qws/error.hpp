#pragma once

#include <stdexcept>
#include <string>

namespace qws {

// Malformed graph expressions, files and spec strings.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments that violate an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Eigensolver failure, exceeded search limits, failed internal cross-checks.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qws
