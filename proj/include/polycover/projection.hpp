// Copyright polycover contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "polycover/types.hpp"

namespace polycover {

/// Nonnegative least squares: argmin ‖Ex − f‖² s.t. x ≥ 0, by the
/// Lawson–Hanson active-set method (finite termination).
Eigen::VectorXd nnls(const Eigen::MatrixXd& E, const Eigen::VectorXd& f,
                     double tol = 1e-12);

struct ProjectionResult {
  Point point;              // argmin over P of (x−y)ᵀW(x−y)
  double metric_distance;   // sqrt of the attained objective
};

/// Projection of y onto polytope P under the metric induced by SPD W,
/// solved exactly as a least-distance program via NNLS.
/// Throws GeometryError when P is empty.
ProjectionResult project_onto_polytope(const HPolytope& P, const Point& y,
                                       const Eigen::MatrixXd& W);

/// Euclidean special case.
ProjectionResult project_onto_polytope(const HPolytope& P, const Point& y);

/// Closest point of a closed ball to y under the metric x ↦ (x−y)ᵀW(x−y).
/// Requires y strictly outside the ball. Secular-equation solve; isotropic
/// metrics reduce to the radial closed form.
ProjectionResult closest_point_on_sphere(const Sphere& s, const Point& y,
                                         const Eigen::MatrixXd& W);

}  // namespace polycover
