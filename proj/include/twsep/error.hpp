#pragma once

#include <stdexcept>
#include <string>

namespace twsep {

// Base of every error raised by the library. The CLI maps the two families
// below onto exit codes 2 (malformed input) and 3 (semantic failure).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class SemanticError : public Error {
 public:
  using Error::Error;
};

class FormatError : public InputError {
 public:
  using InputError::InputError;
};

class SelfLoopError : public InputError {
 public:
  using InputError::InputError;
};

class MembershipError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class NotFoundError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class AlignmentError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class SizeLimitError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class PermutationError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class AdjacentPairError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class NoSeparatorError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class DegenerateDataError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

}  // namespace twsep
