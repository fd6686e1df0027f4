#pragma once

#include <stdexcept>
#include <string>

namespace permrel {

// Malformed cycle notation, word syntax, or out-of-range letters.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration grew past its configured cap. The caps exist so that
// oversized instances fail loudly instead of returning wrong answers.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permrel
