#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singulact {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad index, zero ideal, f(0) != 0, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : InputError("dimension mismatch: expected " + std::to_string(expected) +
                   ", got " + std::to_string(got)) {}
};

/// Syntax error in polynomial / ideal text. `offset` is a byte offset into the input.
class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : InputError(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The input lies outside the classes the engine can compute exactly.
class UnsupportedClass : public Error {
 public:
  using Error::Error;
};

/// Enumeration caps (dimension, number of generators, scan size) exceeded.
class CapsExceeded : public UnsupportedClass {
 public:
  using UnsupportedClass::UnsupportedClass;
};

/// An internal identity that must hold exactly did not. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace singulact
