#pragma once

#include <stdexcept>
#include <string>

namespace nash {

// Bad input or violated precondition (unsupported type, w not in W^P, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical invariant the code relies on was observed to fail.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nash
