#pragma once

#include <stdexcept>
#include <string>

namespace ds {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix could not be inverted; message carries a condition estimate.
struct SingularMatrixError : Error {
  using Error::Error;
};

/// A scalar primitive was evaluated outside its domain (e.g. sqrt at a
/// nonpositive real part).
struct EvalDomainError : Error {
  using Error::Error;
};

/// Composing operators would exceed derivative order 2.
struct OrderOverflowError : Error {
  using Error::Error;
};

/// Conjugation was requested with a non-unitary matrix function.
struct NonUnitaryError : Error {
  using Error::Error;
};

/// Bad user-facing configuration (mass, grid, sample ranges, names).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace ds
