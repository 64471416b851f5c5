#pragma once

#include <stdexcept>
#include <string>

namespace qbell {

/// Base class for all domain errors raised by this library.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The probe normalization denominator 1 + l(l + 2k^2) vanished.  This
/// happens only at l = -1 with kappa -> 1 (alpha -> 0): the two-branch
/// superposition has zero norm and no physical state exists.
class DegenerateProbe : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A parameter lies outside the supported numeric domain (negative
/// amplitudes, r > 20 where cosh(8r) would lose all accuracy, non-finite
/// inputs, ...).
class OutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An inversion (energy target or output-energy target) has no solution in
/// the search interval.
class NoRoot : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A Fock-space computation could not reach the requested tail-mass bound
/// even at the maximum truncation dimension.
class TruncationNotConverged : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qbell
