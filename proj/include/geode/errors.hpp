#pragma once

#include <stdexcept>
#include <string>

namespace geode {

/// Base class for all domain errors raised by this library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Two series with different truncation contexts were combined.
class context_error : public error {
 public:
  using error::error;
};

/// A monomial lies outside the truncation context it was used with.
class bounds_error : public error {
 public:
  using error::error;
};

/// Reciprocal of a series whose constant term is zero.
class not_invertible_error : public error {
 public:
  using error::error;
};

/// The truncation context is too coarse to determine the requested result.
class insufficient_precision_error : public error {
 public:
  using error::error;
};

/// Square root of a series whose constant term is zero or not a rational square.
class no_square_root_error : public error {
 public:
  using error::error;
};

/// A step below -1 was passed to an operation that requires steps >= -1.
class unsupported_step_error : public error {
 public:
  using error::error;
};

/// The path does not satisfy the class precondition of a factorization.
class not_factorable_error : public error {
 public:
  using error::error;
};

/// Enumeration without a down-step bound over a class with infinitely many members.
class infinite_enumeration_error : public error {
 public:
  using error::error;
};

/// The path is not a member of the requested class.
class not_in_class_error : public error {
 public:
  using error::error;
};

/// Coefficient vector does not sum to zero.
class zero_sum_error : public error {
 public:
  using error::error;
};

/// Malformed textual input (rational, path, or series JSON).
class parse_error : public error {
 public:
  using error::error;
};

}  // namespace geode
