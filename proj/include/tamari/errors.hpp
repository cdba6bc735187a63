#pragma once

#include <stdexcept>
#include <string>

namespace tamari {

// Vertex/work caps (CLI exit code 2).
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity the library is supposed to certify failed
// (CLI exit code 3).
struct VerificationMismatch : std::runtime_error {
  explicit VerificationMismatch(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed user input (CLI exit code 4).
struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& what)
      : std::invalid_argument(what) {}
};

// Internal contract broken: exact division left a remainder, a promised
// cancellation did not happen, etc.
struct AlgebraError : std::logic_error {
  explicit AlgebraError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tamari
