#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace mce {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed arguments (non-finite entries, size mismatches, bad tolerances).
struct InvalidInputError : Error {
  using Error::Error;
};

/// A thermodynamic state violating positivity (rho_k <= 0, T <= 0, ...).
struct InvalidStateError : Error {
  using Error::Error;
};

/// The internal energy lies outside the range of the mixture energy model.
struct NoTemperatureError : Error {
  using Error::Error;
};

/// Operation requested on a heat-capacity model it does not support.
struct UnsupportedModelError : Error {
  using Error::Error;
};

/// Root finding: the supplied interval does not bracket a sign change.
struct BracketError : Error {
  using Error::Error;
};

/// Root finding ran out of iterations; carries the last iterate.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, double last)
      : Error(what), last_iterate(last) {}
  double last_iterate;
};

/// A user callback returned a non-finite value; carries the offending point.
struct EvaluationError : Error {
  EvaluationError(const std::string& what, Vector where)
      : Error(what), point(std::move(where)) {}
  Vector point;
};

/// An exact structural identity failed beyond roundoff: implementation bug.
struct InternalConsistencyError : Error {
  using Error::Error;
};

/// Requested time step violates the scheme's stability cap.
struct CflViolationError : Error {
  CflViolationError(const std::string& what, double admissible)
      : Error(what), admissible_lambda(admissible) {}
  double admissible_lambda;
};

/// A finite-volume update produced an unphysical cell state.
struct PositivityFailureError : Error {
  PositivityFailureError(const std::string& what, int cell_index)
      : Error(what), cell(cell_index) {}
  int cell;
};

/// A homotopy sample between two states left the admissible set.
struct HomotopyExitError : Error {
  HomotopyExitError(const std::string& what, double r_coord, double s_coord)
      : Error(what), r(r_coord), s(s_coord) {}
  double r;
  double s;
};

/// Configuration / schema problems (maps to CLI exit code 2).
struct ConfigError : Error {
  using Error::Error;
};

/// Filesystem problems while writing or reading run outputs.
struct IoError : Error {
  using Error::Error;
};

}  // namespace mce
