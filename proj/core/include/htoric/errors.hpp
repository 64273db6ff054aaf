#pragma once

#include <stdexcept>
#include <string>

namespace htoric {

/// Base class for every precondition violation raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable tag, e.g. "rank-deficient".
  virtual const char* kind() const noexcept { return "error"; }
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension-mismatch"; }
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "singular-matrix"; }
};

class RankDeficient : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "rank-deficient"; }
};

class NonGeneric : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "non-generic"; }
};

class InvalidInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid-input"; }
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degree-overflow"; }
};

class GysinUndefined : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "gysin-undefined"; }
};

class NotABundle : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "not-a-bundle"; }
};

}  // namespace htoric
