#pragma once

#include <stdexcept>
#include <string>

namespace akm {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dimension or index-count mismatch between arguments.
struct ShapeError : Error {
  using Error::Error;
};

/// Input violates a stated validity requirement (e.g. non-symmetric matrix
/// where a symmetric one is required, non-alternating form).
struct ValidationError : Error {
  using Error::Error;
};

/// A caller-side precondition does not hold (e.g. soliton solving with a
/// field that is not conformal).
struct ContractError : Error {
  using Error::Error;
};

/// Tensor rank outside the set an operation supports.
struct UnsupportedRankError : Error {
  using Error::Error;
};

/// Malformed input text (bad JSON, bad rational literal).
struct ParseError : Error {
  using Error::Error;
};

/// Structurally valid input that violates the document schema. Carries the
/// path of the offending field.
struct SchemaError : Error {
  SchemaError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path(path) {}
  std::string path;
};

}  // namespace akm
