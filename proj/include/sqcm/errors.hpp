#pragma once

#include <stdexcept>
#include <string>

namespace sqcm {

// Bad user input: unknown vertices, malformed files, out-of-range parameters.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation was refused because it exceeds a configured size cap.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed. This is a bug (or a falsified theorem), not bad input.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace sqcm
