#ifndef CHARP_ERRORS_HPP
#define CHARP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charp {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad (series, rank) combination or unparsable Cartan type string.
struct InvalidCartanType : Error {
  using Error::Error;
};

// Vector length does not match the rank of the ambient root datum.
struct RankMismatch : Error {
  using Error::Error;
};

// Operation requires a dominant weight.
struct NotDominant : Error {
  using Error::Error;
};

// p fails the characteristic validation (p < 2, or composite where a prime
// is required).
struct InvalidCharacteristic : Error {
  using Error::Error;
};

// A configured enumeration/search bound was hit.  `bound` is the value that
// was exceeded, `flag` names the knob that raises it.
struct BoundExceeded : Error {
  long long bound;
  std::string flag;
  BoundExceeded(const std::string& what, long long bound_, std::string flag_)
      : Error(what), bound(bound_), flag(std::move(flag_)) {}
};

// Checked integer arithmetic overflowed and promotion was impossible
// (should not happen; promotion is automatic) or a narrowing was requested.
struct OverflowError : Error {
  using Error::Error;
};

// An internal exact-arithmetic consistency condition failed (nonzero
// remainder in the Weyl character division, inexact Freudenthal division,
// and the like).  Always indicates a bug, never bad user input.
struct ConsistencyError : Error {
  using Error::Error;
};

// KL cache file problems, each kind distinct.
struct CacheVersionError : Error {
  using Error::Error;
};
struct CacheFormatError : Error {
  using Error::Error;
};
struct CacheTypeError : Error {
  using Error::Error;
};

// Unknown identity id passed to the verifier.
struct UnknownIdentity : Error {
  using Error::Error;
};

// Malformed user input (weights, words, numbers).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace charp

#endif
