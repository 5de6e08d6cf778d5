#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mag {

/// Base class of every error thrown by this library.
class MagError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An aspect was declared with no elements (or a graph with no aspects).
class EmptyAspectError : public MagError {
 public:
  using MagError::MagError;
};

/// Duplicate aspect name, or duplicate element label within one aspect.
class DuplicateNameError : public MagError {
 public:
  using MagError::MagError;
};

/// Label violates the token rules (empty, whitespace, '#', ',' or "*").
class BadLabelError : public MagError {
 public:
  using MagError::MagError;
};

/// Edge whose origin equals its destination.
class SelfLoopError : public MagError {
 public:
  using MagError::MagError;
};

/// Element index outside its aspect, or vertex id outside the id space.
class OutOfBoundsError : public MagError {
 public:
  using MagError::MagError;
};

/// Aspect position outside [0, p).
class BadAspectIndexError : public MagError {
 public:
  using MagError::MagError;
};

/// Tuple arity does not match the expected order.
class LengthMismatchError : public MagError {
 public:
  using MagError::MagError;
};

/// Edge passed to an operation that requires membership in E(H).
class EdgeNotInMagError : public MagError {
 public:
  using MagError::MagError;
};

/// Operation requires order >= 2.
class OrderTooLowError : public MagError {
 public:
  using MagError::MagError;
};

/// Composite-vertex id space or a configured size cap was exceeded.
class CapacityError : public MagError {
 public:
  using MagError::MagError;
};

/// Sequence is not a walk of the graph it was used with.
class InvalidWalkError : public MagError {
 public:
  using MagError::MagError;
};

/// Malformed sub-determined endpoint specification.
class BadSubVertexError : public MagError {
 public:
  using MagError::MagError;
};

/// Stream write failure.
class IoError : public MagError {
 public:
  using MagError::MagError;
};

/// Input text rejected by the file parser; carries a 1-based line number.
class ParseError : public MagError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : MagError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mag
