#pragma once
/// @file errors.hpp
/// @brief Exception taxonomy for the verification core.
///
/// Every failure mode callers can act on gets its own type so the C ABI can
/// map exceptions onto stable status codes without string matching.

#include <stdexcept>
#include <string>

namespace rbv {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (algebra/operator/r-matrix files, bad tokens).
struct ParseError : Error {
  using Error::Error;
};

/// Structurally valid input with inconsistent shapes (dim mismatches).
struct DimensionError : Error {
  using Error::Error;
};

/// Value outside the mathematical domain of an operation
/// (e.g. a group chart that requires a positive leading coordinate).
struct DomainError : Error {
  using Error::Error;
};

/// A matrix that must be invertible is numerically singular.
struct SingularError : Error {
  using Error::Error;
};

/// A documented precondition of an operation does not hold
/// (e.g. deriving a matched pair from a map that is not Rota-Baxter).
struct PreconditionError : Error {
  using Error::Error;
};

/// Invalid argument combination at the command layer (unknown case id,
/// missing required option, non-positive budget, ...).
struct ArgumentError : Error {
  using Error::Error;
};

}  // namespace rbv
