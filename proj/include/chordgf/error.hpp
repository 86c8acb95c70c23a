#pragma once

#include <stdexcept>
#include <string>

namespace chordgf {

// Raised when an operation's input violates its documented precondition.
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

// Raised when a request exceeds a configured resource cap (enumeration size).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed text / JSON input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chordgf
