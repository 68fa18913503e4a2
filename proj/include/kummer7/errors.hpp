#pragma once

#include <stdexcept>
#include <string>

namespace kummer7 {

/// Base of every error raised by the library. The CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Coefficient or prime outside the range a series / table was built for.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Integer-indexed access on a series whose exponents are not integers.
class FormError : public Error {
 public:
  using Error::Error;
};

/// Series division by something without a unit leading coefficient.
class DivisionError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Prime at which one of the varieties involved has bad reduction.
class BadPrime : public Error {
 public:
  BadPrime(long long p, const std::string& reason)
      : Error("bad prime " + std::to_string(p) + ": " + reason), prime_(p), reason_(reason) {}

  long long prime() const noexcept { return prime_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  long long prime_;
  std::string reason_;
};

class InconsistentInput : public Error {
 public:
  using Error::Error;
};

class TheoremConstraintViolated : public Error {
 public:
  using Error::Error;
};

class NoSingularFibers : public Error {
 public:
  using Error::Error;
};

class UnsupportedFibration : public Error {
 public:
  using Error::Error;
};

}  // namespace kummer7
