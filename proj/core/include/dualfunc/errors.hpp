#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dualfunc {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Division (or inversion) of a dual number whose real part is zero.
/// Pure dual numbers are zero divisors of the algebra.
class DivisionByPureDual : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exponentiation with a non-positive base where the logarithmic form is required.
class NonPositiveBase : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation at (or within threshold of) a pole of the gamma family.
class PoleError : public DomainError {
 public:
  PoleError(const std::string& what, long nearest_pole)
      : DomainError(what), nearest_pole_(nearest_pole) {}
  /// The non-positive integer the offending real part is closest to.
  long nearest_pole() const noexcept { return nearest_pole_; }

 private:
  long nearest_pole_;
};

/// A reciprocal factor in a shifted-factorial product has zero real part.
class ZeroFactor : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two denominator parameters coincide where a contiguous-relation
/// coefficient requires them distinct.
class DegenerateParameters : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested contiguous relation does not apply to this (p, q) shape.
class InapplicableRelation : public Error {
 public:
  using Error::Error;
};

/// Series evaluated outside its region of convergence.
class DivergentInput : public Error {
 public:
  using Error::Error;
};

/// Iteration budget exhausted before the stopping rule was met.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A result left the representable range of double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed dual literal.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  /// Byte offset of the first offending character.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace dualfunc
