#ifndef SEMIMOD_ERRORS_HPP_
#define SEMIMOD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace semimod {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inconsistent table dimensions, out-of-range indices, schema violations.
struct MalformedError : Error {
  using Error::Error;
};

// 64-bit coefficient arithmetic left the representable range.
struct OverflowError : Error {
  using Error::Error;
};

// A configured enumeration or isomorphism size bound was exceeded.
struct BoundError : Error {
  using Error::Error;
};

// Cell-theoretic preconditions: nilpotent cell, mixed annihilation,
// missing or ambiguous apex.
struct CellError : Error {
  using Error::Error;
};

// Bad arguments: unknown preset or fixture name, invalid parameter.
struct ArgError : Error {
  using Error::Error;
};

}  // namespace semimod

#endif
