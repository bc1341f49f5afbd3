#pragma once

#include <stdexcept>
#include <string>

namespace linksplit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// PD text could not be tokenized or a crossing tuple is ill-formed.
class MalformedPD : public Error {
 public:
  using Error::Error;
};

/// An arc label is not used exactly twice across the crossings.
class ArcMultiplicity : public Error {
 public:
  using Error::Error;
};

/// Arc succession is inconsistent with an oriented diagram.
class TraceFailure : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Propagated crossing signs violate s(e(0)) s(e(1)) = beta(e) on some arc.
class InconsistentSigns : public Error {
 public:
  using Error::Error;
};

/// Weight vector does not match the diagram or cannot be represented in the field.
class WeightFieldMismatch : public Error {
 public:
  using Error::Error;
};

class TooManyComponents : public Error {
 public:
  using Error::Error;
};

/// A structural invariant (d^2 = 0, grading homogeneity, integrality of g) failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace linksplit
