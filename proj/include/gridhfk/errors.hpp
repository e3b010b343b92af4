#pragma once

#include <stdexcept>
#include <string>

namespace gridhfk {

// Malformed or invalid user input (grid text, model documents, parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested grid size exceeds the configured generator cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed: d^2 != 0, inexact division,
// inconsistent grading propagation and the like. Always a bug or an
// unsupported input, never a user mistake.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gridhfk
