#pragma once

#include <stdexcept>
#include <string>

namespace dscode {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotOddPrime : public Error {
 public:
  explicit NotOddPrime(long long p) : Error("not an odd prime: " + std::to_string(p)) {}
};

class DegreeTooSmall : public Error {
 public:
  explicit DegreeTooSmall(long long m) : Error("extension degree too small: " + std::to_string(m)) {}
};

/// Raised when p^m exceeds the enumeration cap. The CLI maps this to exit code 3.
class FieldTooLarge : public Error {
 public:
  FieldTooLarge(long long p, long long m, long long max_q)
      : Error("field too large: " + std::to_string(p) + "^" + std::to_string(m) + " exceeds cap " +
              std::to_string(max_q)) {}
};

class ReducibleModulus : public Error {
 public:
  ReducibleModulus() : Error("modulus is not a monic irreducible polynomial of the field degree") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("inverse of zero") {}
};

class PrimeMismatch : public Error {
 public:
  PrimeMismatch(unsigned a, unsigned b)
      : Error("cyclotomic prime mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class ArithmeticOverflow : public Error {
 public:
  explicit ArithmeticOverflow(const std::string& where) : Error("integer overflow in " + where) {}
};

class EmptyDistribution : public Error {
 public:
  EmptyDistribution() : Error("distribution has no nonzero weight") {}
};

/// A closed-form expression did not evaluate to a (nonnegative) integer.
class NonIntegralTableEntry : public Error {
 public:
  using Error::Error;
};

/// A closed form was requested outside the (parity, divisibility) regime it is stated for.
class CaseError : public Error {
 public:
  using Error::Error;
};

class OddM : public CaseError {
 public:
  OddM() : CaseError("formula requires even m") {}
};

class EvenM : public CaseError {
 public:
  EvenM() : CaseError("formula requires odd m") {}
};

class PDividesM : public CaseError {
 public:
  PDividesM() : CaseError("formula requires p not dividing m") {}
};

class BadCase : public CaseError {
 public:
  explicit BadCase(const std::string& what) : CaseError(what) {}
};

}  // namespace dscode
