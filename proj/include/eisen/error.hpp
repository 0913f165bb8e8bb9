#pragma once

#include <stdexcept>
#include <string>

namespace eisen {

// Caller supplied an argument outside the operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact integer arithmetic would leave the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A numerical or algorithmic step failed to converge or reached a state
// that should be impossible.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace eisen
