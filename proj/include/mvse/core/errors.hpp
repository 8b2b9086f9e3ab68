#pragma once

#include <stdexcept>
#include <string>

namespace mvse {

/// Base of every error raised by the library. Carries the name of the module
/// that raised it so front ends can report "<module>: <message>".
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& message)
      : std::runtime_error(message), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }
  virtual const char* kind() const noexcept { return "error"; }

 private:
  std::string module_;
};

/// Dimensions of the operands do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "shape"; }
};

/// A documented precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

/// Input is larger than the brute-force contract allows.
class SizeLimitError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "size_limit"; }
};

/// Malformed textual input (rationals, JSON, CSV).
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

/// An internal guarantee failed. Reaching this is a bug, not a user error.
class DefectError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "defect"; }
};

}  // namespace mvse
