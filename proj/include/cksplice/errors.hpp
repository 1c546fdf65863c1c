#pragma once

#include <stdexcept>
#include <string>

namespace cksplice {

/// Raised when matrix or vector shapes do not fit an operation.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an input violates the standing assumptions of the
/// classification results (irreducible, not a permutation matrix).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a matrix does not have the block structure an operation expects.
class StructuralError : public std::invalid_argument {
 public:
  explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a brute-force enumeration would exceed its configured bound.
class BoundError : public std::runtime_error {
 public:
  explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cksplice
