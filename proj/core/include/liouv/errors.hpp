#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liouv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial division is not exact") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class Inconsistent : public Error {
 public:
  Inconsistent() : Error("linear system is inconsistent") {}
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("N must be a nonzero polynomial") {}
};

class NotDarboux : public Error {
 public:
  NotDarboux() : Error("polynomial does not divide its image under D") {}
};

class NotDarbouxFactor : public Error {
 public:
  explicit NotDarbouxFactor(const std::string& v)
      : Error("factor " + v + " is not a Darboux polynomial of the operator") {}
};

class DegreeTooLarge : public Error {
 public:
  DegreeTooLarge(int requested, int cap)
      : Error("Darboux degree " + std::to_string(requested) +
              " exceeds the safety cap " + std::to_string(cap)) {}
};

class Timeout : public Error {
 public:
  Timeout() : Error("time limit exceeded") {}
};

// Numeric evaluation errors.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

class PathSingular : public Error {
 public:
  using Error::Error;
};

class TrajectoryHitSingularity : public Error {
 public:
  using Error::Error;
};

/// Parse failures carry the 0-based character offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnsupportedFunction : public ParseError {
 public:
  using ParseError::ParseError;
};

class NonPolynomialPower : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownSymbol : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace liouv
