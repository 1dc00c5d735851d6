#pragma once

#include <stdexcept>

namespace wrlab {

// Precondition violations on mathematical inputs.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Division by zero and similar arithmetic failures.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rank-deficient generators, zero scalings of a lattice map.
class DegeneracyError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Lattice comparison that cannot be decided in a single quadratic field.
class UndecidableError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Enumeration exceeded its node budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wrlab
