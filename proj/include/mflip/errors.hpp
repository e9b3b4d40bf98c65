#pragma once

#include <stdexcept>
#include <string>

namespace mflip {

// Raised for inputs that fail validation (bad dimensions, non-normalized
// vectors, malformed files). Maps to process exit code 1 in the CLI.
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a computation leaves its numerical contract (eigenvalues
// more negative than tolerated, identities broken beyond rounding).
// Maps to process exit code 2 in the CLI.
class numerical_failure : public std::runtime_error {
 public:
  explicit numerical_failure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace mflip
