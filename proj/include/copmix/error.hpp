#pragma once

#include <stdexcept>
#include <string>

namespace copmix {

/// Base class for all copmix errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated a documented precondition (sizes, ranges, flags).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A density has non-positive or non-finite mass and cannot be normalized.
class DegenerateDensityError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the admissible domain of its family.
class ParameterDomainError : public Error {
 public:
  using Error::Error;
};

/// A mixture component received (essentially) zero total weight.
class EmptyComponentError : public Error {
 public:
  using Error::Error;
};

/// A numeric routine produced a non-finite result.
class NumericalFailureError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace copmix
