#pragma once

#include <stdexcept>
#include <string>

namespace ehrstar {

/// Malformed input: JSON, builtin names, vector files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No counting route is applicable within the configured caps.
class InfeasibleStrategy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ehrstar
