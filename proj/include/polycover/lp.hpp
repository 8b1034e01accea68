// Copyright polycover contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <limits>

#include "polycover/types.hpp"

namespace polycover {

/// min cᵀx  s.t.  Ax ≤ b,  lower ≤ x ≤ upper.
/// A zero objective turns the solve into a pure feasibility problem.
/// Bounds default to free variables (±inf).
struct LpProblem {
  Eigen::VectorXd c;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd lower;  // empty = all -inf
  Eigen::VectorXd upper;  // empty = all +inf

  static constexpr double kInf = std::numeric_limits<double>::infinity();

  static LpProblem feasibility(const Eigen::MatrixXd& A,
                               const Eigen::VectorXd& b);
  static LpProblem minimize(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                            const Eigen::VectorXd& b);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Eigen::VectorXd x;       // valid when Optimal
  double objective = 0.0;  // valid when Optimal

  bool optimal() const { return status == LpStatus::Optimal; }
};

/// Dense two-phase simplex with a Bland fallback against cycling.
/// Optimal solutions satisfy Ax ≤ b + 1e-7 and are within 1e-7 relative of
/// the true optimum. Throws SolverError on numerical breakdown.
LpResult lp_solve(const LpProblem& p);

}  // namespace polycover
