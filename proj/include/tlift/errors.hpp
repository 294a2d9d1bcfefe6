#pragma once

#include <stdexcept>
#include <string>

namespace tlift {

/// Precondition or mathematical-domain violation (zero divisor, bad exponent range, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation hit a pole of a rational function; carries the offending component.
struct PoleError : std::runtime_error {
  int component;
  explicit PoleError(const std::string& what, int comp = -1)
      : std::runtime_error(what), component(comp) {}
};

/// Degree or lambda-exponent cap exceeded.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented contract between modules was violated; carries the residual.
struct ContractError : std::runtime_error {
  double residual;
  explicit ContractError(const std::string& what, double res = 0.0)
      : std::runtime_error(what), residual(res) {}
};

/// A structural quantity was requested at a non-generic point (pole, rank drop).
struct GenericPointError : std::runtime_error {
  explicit GenericPointError(const std::string& what) : std::runtime_error(what) {}
};

/// Extended solution has a zero canonical leg; input was not normalized.
struct NotNormalizedError : std::runtime_error {
  int leg;
  explicit NotNormalizedError(const std::string& what, int leg_index = -1)
      : std::runtime_error(what), leg(leg_index) {}
};

}  // namespace tlift
