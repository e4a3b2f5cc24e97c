#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace driftbayes {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition or type invariant was violated.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// The Euler recursion produced a non-finite state or drift value.
class SimulationDivergedError : public Error {
 public:
  SimulationDivergedError(const std::string& what, std::size_t step)
      : Error(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// A function argument left the mathematical domain of an operation
/// (e.g. a diffusion coefficient that is not strictly positive).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// The requested operation needs a property the basis family lacks.
class UnsupportedFamilyError : public Error {
 public:
  explicit UnsupportedFamilyError(const std::string& what) : Error(what) {}
};

/// A symmetric solve failed because the matrix is not positive definite.
class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, double smallest_eigenvalue)
      : Error(what), smallest_eigenvalue_(smallest_eigenvalue) {}
  double smallest_eigenvalue() const noexcept { return smallest_eigenvalue_; }

 private:
  double smallest_eigenvalue_;
};

/// Adaptive quadrature failed to reach its tolerance.
class QuadratureError : public Error {
 public:
  explicit QuadratureError(const std::string& what) : Error(what) {}
};

/// File reading/writing or schema mismatch.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace driftbayes
