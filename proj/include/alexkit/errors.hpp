#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alexkit {

/// Base of every error raised by the library.
///
/// Errors fall in two families which the CLI maps to distinct exit codes:
/// input errors (malformed or inconsistent text) and domain errors (a
/// well-formed request that has no answer, such as evaluating at t = 0).
class Error : public std::runtime_error {
 public:
  enum class Family { Input, Domain };

  Error(Family family, const std::string& what)
      : std::runtime_error(what), family_(family) {}

  Family family() const noexcept { return family_; }

 private:
  Family family_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(Family::Input, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(Family::Domain, what) {}
};

/// Malformed text. `position` is a 0-based byte offset into the input.
class ParseError : public InputError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : InputError("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class AmbiguousOrientation : public InputError {
 public:
  using InputError::InputError;
};

class BoundaryMismatch : public InputError {
 public:
  BoundaryMismatch(std::size_t position, const std::string& expected, const std::string& found)
      : InputError("boundary mismatch at position " + std::to_string(position) + ": expected " +
                   expected + ", found " + found),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotFound : public InputError {
 public:
  using InputError::InputError;
};

class ZeroPolynomial : public DomainError {
 public:
  ZeroPolynomial() : DomainError("operation undefined on the zero polynomial") {}
};

class NotAUnit : public DomainError {
 public:
  NotAUnit() : DomainError("t must be a unit (t != 0)") {}
};

class UnknownGenerator : public DomainError {
 public:
  explicit UnknownGenerator(int generator)
      : DomainError("no abelian weight for generator x" + std::to_string(generator)) {}
};

class UseMultivariableRoute : public DomainError {
 public:
  UseMultivariableRoute() : DomainError("input has several components; use the multivariable route") {}
};

class UseUnivariateRoute : public DomainError {
 public:
  UseUnivariateRoute() : DomainError("input is a knot; use the univariate route") {}
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptyMatrix : public DomainError {
 public:
  EmptyMatrix() : DomainError("reduced Burau representation needs at least two strands") {}
};

class NotDivisible : public DomainError {
 public:
  NotDivisible() : DomainError("exact division failed: divisor does not divide dividend") {}
};

}  // namespace alexkit
