#pragma once

#include <stdexcept>

namespace quasicover {

// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap would be exceeded. The CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant; never expected to surface.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace quasicover
