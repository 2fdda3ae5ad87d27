#pragma once

// Exception hierarchy shared by the whole library.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary operation on polynomials over different rings.
class RingMismatchError : public Error {
 public:
  using Error::Error;
  RingMismatchError() : Error("operands belong to different rings") {}
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
  IndexOutOfRangeError() : Error("variable index out of range") {}
};

// Substitution or map construction with the wrong number of components.
class ArityMismatchError : public Error {
 public:
  using Error::Error;
  ArityMismatchError() : Error("component count does not match ring dimension") {}
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
  DivisionByZeroError() : Error("division by zero") {}
};

class NotDivisibleError : public Error {
 public:
  using Error::Error;
  NotDivisibleError() : Error("exact division failed: not divisible") {}
};

class ConstantInputError : public Error {
 public:
  using Error::Error;
  ConstantInputError() : Error("operation undefined for constant polynomials") {}
};

class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
  ZeroPolynomialError() : Error("operation undefined for the zero polynomial") {}
};

class EmptyIdealError : public Error {
 public:
  using Error::Error;
  EmptyIdealError() : Error("all generators are zero") {}
};

// Local computation walked past the configured degree cap.
class DegreeCapExceededError : public Error {
 public:
  explicit DegreeCapExceededError(unsigned cap)
      : Error("degree cap " + std::to_string(cap) + " exceeded"), cap_(cap) {}
  unsigned cap() const { return cap_; }

 private:
  unsigned cap_;
};

// Hypersurface (or map component) does not pass through the origin.
class NotThroughOriginError : public Error {
 public:
  using Error::Error;
  NotThroughOriginError() : Error("germ does not vanish at the origin") {}
};

class ZeroPullbackError : public Error {
 public:
  using Error::Error;
  ZeroPullbackError() : Error("pullback is identically zero") {}
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
  InvalidParameterError() : Error("invalid parameter") {}
};

// Random search hit its retry budget without producing a valid object.
class GenerationExhaustedError : public Error {
 public:
  using Error::Error;
  GenerationExhaustedError() : Error("random generation exhausted its retry budget") {}
};

// Truncation-dimension sequence never stabilized below the cap.
class CapExceededWithoutStabilizationError : public Error {
 public:
  explicit CapExceededWithoutStabilizationError(unsigned cap)
      : Error("truncation dimensions did not stabilize below degree " + std::to_string(cap)),
        cap_(cap) {}
  unsigned cap() const { return cap_; }

 private:
  unsigned cap_;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownVariableError : public ParseError {
 public:
  UnknownVariableError(const std::string& name, std::size_t line, std::size_t column)
      : ParseError("unknown variable '" + name + "'", line, column) {}
};

class NegativeExponentError : public ParseError {
 public:
  NegativeExponentError(std::size_t line, std::size_t column)
      : ParseError("negative exponent", line, column) {}
};

}  // namespace germlab
