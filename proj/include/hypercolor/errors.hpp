#pragma once

#include <stdexcept>
#include <string>

namespace hypercolor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension outside the supported range, or mismatched dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed vertex string, set document, or hex mask.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined for S = empty set or S = whole cube.
class ConstantSetError : public Error {
 public:
  using Error::Error;
};

/// Set density above 1/2 where the caller disallowed complementing.
class DensityError : public Error {
 public:
  using Error::Error;
};

/// Parameter matrix that no non-constant perfect coloring can have.
class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};

/// Other invalid argument (bad construction parameters, bad search mode).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hypercolor
