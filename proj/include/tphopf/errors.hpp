#pragma once

#include <stdexcept>
#include <string>

namespace tphopf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: unreadable file, bad rational literal, inconsistent dims.
struct ParseError : Error {
  using Error::Error;
};

/// Operands with incompatible shapes.
struct ShapeError : Error {
  using Error::Error;
};

/// A map that must be invertible (e.g. the antipode) is singular.
struct BijectivityError : Error {
  using Error::Error;
};

/// A matrix fails the Leibniz law required of a derivation.
struct DerivationError : Error {
  using Error::Error;
};

/// A theorem hypothesis does not hold for the given data.
struct HypothesisError : Error {
  using Error::Error;
};

/// A structure map does not descend to the requested quotient.
struct WellDefinednessError : Error {
  using Error::Error;
};

}  // namespace tphopf
