#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fano {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroInversion : public Error {
 public:
  ZeroInversion() : Error("inverse of zero") {}
};

class NotPrime : public Error {
 public:
  explicit NotPrime(unsigned long long n)
      : Error("not an odd prime: " + std::to_string(n)) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is not invertible") {}
};

class EqualPoints : public Error {
 public:
  EqualPoints() : Error("points coincide") {}
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class MultiplicityMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateInstance : public Error {
 public:
  using Error::Error;
};

class Inconclusive : public Error {
 public:
  using Error::Error;
};

// Raised when a Groebner computation exceeds its configured ceiling.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace fano
