#pragma once

#include <stdexcept>
#include <string>

namespace specorder {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point list or arrow list does not describe a finite space.
class InvalidSpace : public Error {
 public:
  enum class Kind { duplicate_point, unknown_endpoint, too_many_points };

  InvalidSpace(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class UnknownPoint : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation needs x -> y and it does not hold.
class NotSpecialization : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured guard.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Any other violated precondition (empty set, non-monotone map, ...).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace specorder
