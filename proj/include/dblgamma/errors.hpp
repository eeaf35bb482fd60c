// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dblgamma {

enum class ErrorKind {
  domain,            // argument outside the function's real domain
  pole,              // evaluation at (or too close to) s = 1
  non_finite,        // a series term or integrand value was NaN/inf
  capacity,          // request exceeds a hard implementation cap
  unknown_id,        // identity id not present in a registry
  invalid_argument,  // malformed options or grid
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library. The C API maps `kind()`
/// onto its status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(ErrorKind::pole, what) {}
};

/// A series term evaluated to NaN or infinity.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, std::uint64_t index)
      : Error(ErrorKind::non_finite, what), index_(index) {}
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

/// An integrand returned a non-finite value at an interior node.
class IntegrandError : public Error {
 public:
  IntegrandError(const std::string& what, double location)
      : Error(ErrorKind::non_finite, what), location_(location) {}
  double location() const noexcept { return location_; }

 private:
  double location_;
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ErrorKind::capacity, what) {}
};

class UnknownIdentityError : public Error {
 public:
  explicit UnknownIdentityError(const std::string& id)
      : Error(ErrorKind::unknown_id, "unknown identity id '" + id + "'") {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::invalid_argument, what) {}
};

}  // namespace dblgamma
