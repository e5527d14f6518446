#pragma once

#include <stdexcept>

namespace tgraph {

// Thrown when a requested object would exceed a configured resource cap
// (element count, matrix order, search size).
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when two elements do not live under the same exponent bounds.
struct IncompatibleElements : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace tgraph
