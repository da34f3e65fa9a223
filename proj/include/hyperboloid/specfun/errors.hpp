#pragma once

#include <stdexcept>
#include <string>

namespace hyperboloid {

/// Thrown when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when an iterative method exhausts its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by least-squares fits whose design matrix is too ill-conditioned.
class ConditioningError : public std::runtime_error {
public:
  explicit ConditioningError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperboloid
