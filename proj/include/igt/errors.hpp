#pragma once

#include <stdexcept>
#include <string>

namespace igt {

/// Violated operation precondition (bad arguments, unsupported dimension,
/// grids too coarse, ...). Maps to CLI exit code 2.
class precondition_error : public std::runtime_error {
public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

class invalid_argument : public precondition_error {
public:
  explicit invalid_argument(const std::string& what) : precondition_error(what) {}
};

class unsupported_dimension : public precondition_error {
public:
  explicit unsupported_dimension(const std::string& what) : precondition_error(what) {}
};

class resolution_error : public precondition_error {
public:
  explicit resolution_error(const std::string& what) : precondition_error(what) {}
};

/// Requested evaluation falls outside the data grids by more than the
/// allowed quadrature weight.
class coverage_error : public precondition_error {
public:
  explicit coverage_error(const std::string& what) : precondition_error(what) {}
};

/// A numerical check failed (identity out of tolerance, non-convergent
/// limit, divergent integrand). Maps to CLI exit code 3.
class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Divergent integral detected; carries the truncated partial value.
class divergence_error : public numerical_error {
public:
  divergence_error(const std::string& what, double partial)
      : numerical_error(what), partial_value(partial) {}
  double partial_value;
};

class no_convergence_error : public numerical_error {
public:
  no_convergence_error(const std::string& what, std::string trace = {})
      : numerical_error(what), diagnostic_trace(std::move(trace)) {}
  std::string diagnostic_trace;
};

/// File format or filesystem failure. Maps to CLI exit code 4.
class io_error : public std::runtime_error {
public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace igt
