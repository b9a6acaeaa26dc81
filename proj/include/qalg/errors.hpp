#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class PoleAtPoint : public Error {
 public:
  PoleAtPoint() : Error("denominator vanishes at the evaluation point") {}
};

class UnboundSymbol : public Error {
 public:
  explicit UnboundSymbol(const std::string& name)
      : Error("no binding for symbol '" + name + "'") {}
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& name)
      : Error("symbol '" + name + "' is not in the scalar context") {}
};

/// The Ore denominator is not a nonzero Laurent polynomial in x.
class NotInS : public Error {
 public:
  NotInS() : Error("element is not a nonzero Laurent polynomial in x") {}
};

class DivisionByZeroElement : public Error {
 public:
  DivisionByZeroElement() : Error("division by the zero element") {}
};

class WidthTooLarge : public Error {
 public:
  WidthTooLarge() : Error("irreducibility is only decided for y-width <= 1") {}
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("zero vector") {}
};

/// Both reduction operators fix the line of the vector: x1 = +-q^{1-s}.
class ExcludedParameter : public Error {
 public:
  ExcludedParameter() : Error("reduction stalled: x1 is of the excluded form +-q^(1-s)") {}
};

class NotFree : public Error {
 public:
  NotFree() : Error("valid rank-one pair matches none of the families I, II, III") {}
};

class InvalidModule : public Error {
 public:
  InvalidModule() : Error("action polynomials violate the defining relations") {}
};

class NotInvertible : public Error {
 public:
  NotInvertible() : Error("element is not invertible") {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class IllegalSymbolForRing : public Error {
 public:
  IllegalSymbolForRing(const std::string& symbol, const std::string& ring)
      : Error("symbol '" + symbol + "' is not allowed in ring " + ring) {}
};

class NonScalarDenominator : public Error {
 public:
  NonScalarDenominator() : Error("denominator is not a scalar of the target ring") {}
};

}  // namespace qalg
