#pragma once

#include <stdexcept>
#include <string>

namespace hhgr {

/// A requested size exceeds the configured enumeration or degree bound.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, unsigned requested, unsigned bound)
      : std::runtime_error(what + ": " + std::to_string(requested) + " exceeds bound " +
                           std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}

  unsigned requested() const noexcept { return requested_; }
  unsigned bound() const noexcept { return bound_; }

 private:
  unsigned requested_;
  unsigned bound_;
};

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InhomogeneousArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when text input (partition syntax, class files) is malformed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hhgr
