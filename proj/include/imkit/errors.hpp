#pragma once

#include <stdexcept>
#include <string>

namespace imkit {

// Bad arguments or out-of-contract values. CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text; carries the offending line number in the message.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem problems. CLI maps this to exit code 3.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds a hard capacity guard (e.g. exhaustive enumeration size).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace imkit
