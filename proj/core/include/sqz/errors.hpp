#pragma once

#include <stdexcept>
#include <string>

namespace sqz {

/// Thrown when an operation is evaluated exactly at the critical point
/// (delta = 0): the Bogoliubov angle diverges and no finite closed form
/// exists there. Asymptotic laws near the transition are served by the
/// fitting layer instead.
class CriticalSingularity : public std::domain_error {
 public:
  explicit CriticalSingularity(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a truncated-basis oracle exhausts its growth budget before
/// its observables stabilise. what() carries the convergence record.
class ConvergenceFailure : public std::runtime_error {
 public:
  explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by trace post-processing when the input does not span enough
/// structure (e.g. fewer than two squeezing minima for a period estimate).
class InsufficientSpan : public std::runtime_error {
 public:
  explicit InsufficientSpan(const std::string& what) : std::runtime_error(what) {}
};

/// Column-level CSV schema violation; column() names the offender.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string column, const std::string& what)
      : std::runtime_error(what), column_(std::move(column)) {}
  const std::string& column() const { return column_; }

 private:
  std::string column_;
};

}  // namespace sqz
