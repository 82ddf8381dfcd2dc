#pragma once

#include <stdexcept>

namespace ptolemy {

// Malformed or inconsistent caller input (bad vertex, crossing diagonals,
// boundary edge where a diagonal is required, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a size guard of an exhaustive routine.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptolemy
