#pragma once

#include <stdexcept>
#include <string>

namespace tuttekit {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands that do not fit together (variable lists, dimensions, nesting).
class StructuralError : public Error {
  public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Exact division left a remainder.
class DivisionError : public Error {
  public:
    using Error::Error;
};

/// Vector not in the rational span of a lattice basis.
class SpanError : public Error {
  public:
    using Error::Error;
};

/// Vector in the span but with non-integral lattice coordinates.
class MembershipError : public Error {
  public:
    using Error::Error;
};

/// A sweep would exceed its configured size guard.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Request for a combination the engines do not cover.
class UnsupportedError : public Error {
  public:
    using Error::Error;
};

} // namespace tuttekit
