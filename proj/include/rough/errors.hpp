#pragma once

#include <stdexcept>
#include <string>

namespace rough {

// Raised for every rejected input: malformed tables, unknown ids, violated
// preconditions. The CLI maps it to exit code 2; anything else is a bug.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rough
