#pragma once

#include <stdexcept>
#include <string>

namespace dioph {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two operands live in different ambient dimensions.
class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// All weights are zero while the threshold is positive: the threshold set is
/// empty and has no generators.
class EmptyThresholdSet : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The input lies outside the supported catalog (ideal shape, surface, class).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A point lies on the support of a subscheme, where the Weil function has a
/// pole.
class SupportHit : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (polynomials, rationals, class literals, points).
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace dioph
