#pragma once

#include <stdexcept>
#include <string>

namespace gallai {

// Malformed input, violated precondition, or failed theorem hypothesis.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A materialization or enumeration size limit was exceeded. The message names
// the guard and the limiting size.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gallai
