#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace absorder {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input; position is a byte offset into the original string.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// Refusal to enumerate a group or poset past the configured size guard.
struct size_guard_error : error {
  using error::error;
};

// An internal cross-check failed. Indicates a bug, never a bad input.
struct internal_check_error : error {
  using error::error;
};

// Contract violation on inputs: mismatched groups, invalid covers, bad factors.
struct validation_error : error {
  using error::error;
};

}  // namespace absorder
