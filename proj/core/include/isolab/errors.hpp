#pragma once

#include <stdexcept>
#include <string>

namespace isolab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A prefix, grid or gauge is too short for the requested check.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Interpolation nodes are not pairwise distinct.
class DuplicateNode : public Error {
 public:
  using Error::Error;
};

/// A prefix claimed to be an m-sequence fails verification.
class NotMSequence : public Error {
 public:
  using Error::Error;
};

/// A reconstructed polynomial disagrees with the data it must interpolate.
class VerificationFailed : public Error {
 public:
  using Error::Error;
};

/// Vector/matrix/norm dimensions do not line up.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Two operators that must commute do not.
class CommutatorNonzero : public Error {
 public:
  using Error::Error;
};

/// The operation needs a p-norm gauge but the operator carries another norm.
class InvalidNorm : public Error {
 public:
  using Error::Error;
};

/// A binary window has the wrong length for the requested parameter.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the supported enumeration/search bounds.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Parameter combination without a supported closed form.
class UnsupportedParameter : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (JSON, rationals, words).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace isolab
