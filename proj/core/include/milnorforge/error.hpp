#pragma once

#include <stdexcept>
#include <string>

namespace milnorforge {

// A mathematical precondition does not hold (p | N, rank != 3, bound
// exceeded, ...). The message names the violated hypothesis.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request itself is malformed: unknown label, unknown catalog name,
// unparseable field element, inconsistent sizes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace milnorforge
