#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valtree {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation applied outside its domain (mismatched radii, bad precondition).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed literal; `position` is a 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Truncation hides the leading term; retry with a larger expansion order.
class IndeterminateValuation : public Error {
 public:
  using Error::Error;
};

/// A Newton polygon edge needs an algebraic coefficient outside the model.
class UnsupportedCoefficientField : public DomainError {
 public:
  using DomainError::DomainError;
};

class StabilizationDepthExceeded : public Error {
 public:
  using Error::Error;
};

class DescentViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

class CenterNotRoot : public DomainError {
 public:
  using DomainError::DomainError;
};

class GammaOutsideSupport : public DomainError {
 public:
  using DomainError::DomainError;
};

class WitnessUnavailable : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace valtree
