#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Point or matrix sizes that do not match the ambient dimension.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation requested on the boundary or outside of a domain.
class NotInterior : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A linear system or linear change of coordinates with no unique solution.
class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pole of a radial profile, loss of positivity, or a non-finite metric entry.
class DegenerateMetric : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that does not follow one of the documented JSON or CLI schemas.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace toric
