// Copyright polycover contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace polycover {

/// Base class for all polycover errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands with incompatible ambient dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Invalid geometric input (singular shape matrix, empty polytope, ...).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure inside one of the dense solvers.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// Wall-clock budget of an exact search exceeded.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

/// Malformed scene or artifact file. `field` is the JSON pointer of the
/// offending entry ("" for document-level problems), `line` the 1-based
/// source line when known (0 otherwise).
class SceneFormatError : public Error {
 public:
  SceneFormatError(const std::string& msg, std::string field, int line = 0)
      : Error(msg), field_(std::move(field)), line_(line) {}
  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  std::string field_;
  int line_;
};

}  // namespace polycover
