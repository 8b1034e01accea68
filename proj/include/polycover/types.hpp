// Copyright polycover contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <variant>
#include <vector>

namespace polycover {

/// A configuration-space point. Length must match the ambient dimension of
/// whatever it is used with; all entries finite.
using Point = Eigen::VectorXd;

/// Membership tolerance for geometric predicates.
inline constexpr double kGeomTol = 1e-9;
/// Termination tolerance for the dense LP/QP solvers.
inline constexpr double kSolverTol = 1e-7;

/// Half-space {q : aᵀq ≤ b}.
struct Hyperplane {
  Eigen::VectorXd a;
  double b = 0.0;
};

/// Intersection of half-spaces {q : Aq ≤ b}.
struct HPolytope {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;

  int dim() const { return static_cast<int>(A.cols()); }
  int num_faces() const { return static_cast<int>(A.rows()); }

  /// Componentwise Aq ≤ b + tol.
  bool contains(const Point& q, double tol = kGeomTol) const;

  void append(const Hyperplane& h);

  static HPolytope axis_box(const Eigen::VectorXd& lower,
                            const Eigen::VectorXd& upper);
};

/// Affine image of the unit ball, {Cu + d : ‖u‖ ≤ 1}.
struct Ellipsoid {
  Eigen::MatrixXd C;
  Eigen::VectorXd d;

  int dim() const { return static_cast<int>(d.size()); }
  double volume() const;

  /// ‖C⁻¹(q − d)‖, the metric distance of q from the center.
  double metric_norm(const Point& q) const;

  /// C⁻ᵀC⁻¹, the quadratic form with E = {x : (x−d)ᵀH(x−d) ≤ 1}.
  Eigen::MatrixXd metric_matrix() const;

  static double unit_ball_volume(int n);
  static Ellipsoid ball(const Point& center, double radius);
};

struct Sphere {
  Eigen::VectorXd center;
  double radius = 0.0;
};

using ConvexObstacle = std::variant<HPolytope, Sphere>;

int obstacle_dim(const ConvexObstacle& o);

/// Axis-aligned box, the domain type. lower < upper componentwise.
struct Box {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  int dim() const { return static_cast<int>(lower.size()); }
  bool contains(const Point& q, double tol = kGeomTol) const;
  double diagonal() const { return (upper - lower).norm(); }
  double volume() const { return (upper - lower).prod(); }
  HPolytope as_polytope() const;
};

}  // namespace polycover
