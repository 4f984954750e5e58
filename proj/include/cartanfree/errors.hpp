#pragma once

#include <stdexcept>

namespace cartanfree {

// Bad user input: dimension mismatches, malformed tables, violated preconditions.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Configured limits exceeded (node caps, boxes too small to decide a question).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant. Must not occur for valid inputs.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cartanfree
