// errors.hpp -- exception types raised by the litt library

#pragma once

#include <stdexcept>
#include <string>

namespace litt {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word, chain or pattern text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two words that must share a length do not.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// A resource guard (enumeration size, table size) would be exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// An overlap m_i of a chain is not in Cor(C_i, C_{i+1}).
class InvalidOverlap : public Error {
 public:
  using Error::Error;
};

/// The word is not covered by a single chain of overlapping occurrences.
class NotAnOverlap : public Error {
 public:
  using Error::Error;
};

/// The involution needs Cor(A) == Cor(B).
class AutocorrelationMismatch : public Error {
 public:
  using Error::Error;
};

/// The operation needs two distinct words.
class EqualWords : public Error {
 public:
  using Error::Error;
};

/// The asymptotic denominator vanishes for this pair.
class DegeneratePair : public Error {
 public:
  using Error::Error;
};

/// Cor(A) == Cor(B), so the threshold n0 is undefined.
class EmptySymmetricDifference : public Error {
 public:
  using Error::Error;
};

/// Generic precondition failure (e.g. [A,A] <= [B,B] for the conjecture check).
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace litt
