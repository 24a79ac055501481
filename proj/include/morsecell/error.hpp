#pragma once

#include <stdexcept>
#include <string>

namespace morsecell {

/// Base class for every error raised by the library. The CLI maps all of
/// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monomials or ideals over different ambient rings were combined.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation would produce (or was handed) the zero ideal.
class ZeroIdeal : public Error {
 public:
  using Error::Error;
};

/// A size limit (variables, generators, vertices, enumeration width) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace morsecell
