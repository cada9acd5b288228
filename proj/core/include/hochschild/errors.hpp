#pragma once

#include <stdexcept>
#include <string>

namespace hochschild {

/// Caller violated a precondition (mixed fields, bad dimensions, out-of-range degree).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Malformed textual input (scalar strings, config documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant such as d^2 = 0 failed; always indicates a construction bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hochschild
