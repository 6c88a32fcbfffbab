#pragma once

#include <stdexcept>
#include <string>

namespace pathlat {

// Raised by parse_path on malformed path literals.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation's domain precondition is violated: length
// mismatch, incomparable endpoints, wrong path class, and the like.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an interval enumeration grows past the caller-supplied cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive sweep is asked to exceed its configured limit.
struct LimitExceeded : std::runtime_error {
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pathlat
