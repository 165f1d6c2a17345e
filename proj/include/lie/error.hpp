#pragma once

#include <stdexcept>
#include <string>

namespace lie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown type, rank out of range, node index out of range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation was called on data that violates its stated precondition.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// The library refuses to answer because the question falls outside the
/// hypotheses under which an answer is defined.
class DomainRefusal : public Error {
 public:
  using Error::Error;
};

/// A computed object failed a structural check that the theory guarantees.
/// Seeing this means either a bug here or a counterexample to the theory.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured size cap.
class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace lie
