#pragma once

#include <stdexcept>
#include <string>

namespace nlcs {

// Base class for every error raised by the library. The CLI maps the
// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class UnitarityViolation : public Error {
 public:
  UnitarityViolation(long index, double value)
      : Error("UnitarityViolation: squared ladder element at n=" +
              std::to_string(index) + " is " + std::to_string(value)),
        index_(index),
        value_(value) {}

  long index() const noexcept { return index_; }
  double value() const noexcept { return value_; }

 private:
  long index_;
  double value_;
};

class RootSolveFailure : public Error {
 public:
  using Error::Error;
};

// Series-evaluation failures. All of them mean "no trustworthy number".
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class DivergentSeries : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace nlcs
