#pragma once

#include <stdexcept>
#include <string>

namespace einflag {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (n, p) outside n >= 3, 1 <= p <= n-1.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// Exact polynomial division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// Interval image of a denominator contains zero; refine the input and retry.
class DenominatorStraddlesZero : public Error {
 public:
  using Error::Error;
};

/// Ricci components provably differ.
class NotEinstein : public Error {
 public:
  using Error::Error;
};

/// A certification step failed. Signals a derivation bug or an honest
/// counterexample; never swallowed by the solver.
class CertificationError : public Error {
 public:
  using Error::Error;
};

class FactorizationMismatch : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class FixtureMismatch : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class DegenerateDenominator : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class UnexpectedNonKahler : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class MembershipFailure : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

class PositivityUndecided : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

}  // namespace einflag
