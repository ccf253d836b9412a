#pragma once

#include <stdexcept>
#include <string>

namespace jcnc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mode or operator dimension below the supported minimum.
class InvalidDimension : public Error {
 public:
  using Error::Error;
};

/// A subsystem label that is missing from, or duplicated in, a layout.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// Matrix shape or Hermiticity violates an operation's contract.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Mixed matrix and vector factors passed to a tensor product.
class TensorTypeError : public Error {
 public:
  using Error::Error;
};

/// An operator whose layout does not match what the operation expects.
class LayoutMismatch : public Error {
 public:
  using Error::Error;
};

/// Out-of-range scalar argument (weights, ratios, layer counts, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Scenario configuration problem. `field()` names the offending key when known.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field.empty() ? message : "field '" + field + "': " + message),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// An evolved density matrix failed its Hermiticity / trace / positivity check.
class NumericalValidationError : public Error {
 public:
  using Error::Error;
};

/// Failure writing an output file; the message carries the path.
class OutputError : public Error {
 public:
  using Error::Error;
};

}  // namespace jcnc
