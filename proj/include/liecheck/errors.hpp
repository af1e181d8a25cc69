#pragma once

#include <stdexcept>
#include <string>

namespace liecheck {

// Caller passed something malformed (bad dimension, bad index, bad flag).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested case family does not exist.
class UnknownCaseError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Root data could not be assembled into a consistent object.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic produced a weight outside the dominant chamber.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An operation was called on inputs outside its domain (e.g. mu - beta not dominant).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace liecheck
