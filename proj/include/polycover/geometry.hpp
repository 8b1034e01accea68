// Copyright polycover contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "polycover/types.hpp"

namespace polycover {

enum class SegmentCheckMode {
  Exact,    // closed forms and LP-equivalent interval tests
  Sampled,  // fixed-step point checks, for parity with sampling-based checkers
};

/// Box domain minus a list of convex obstacles. C_free = {q in domain :
/// q outside every obstacle}. Obstacle boundaries count as collision, the
/// domain boundary counts as free.
class Environment {
 public:
  /// Validates the scene: domain lower < upper, sphere radii > 0, polytope
  /// obstacles bounded and nonempty (LP), and C_free nonempty (at least one
  /// free sample out of 10,000 deterministic draws). Throws GeometryError.
  Environment(Box domain, std::vector<ConvexObstacle> obstacles);

  int dimension() const { return domain_.dim(); }
  const Box& domain() const { return domain_; }
  const std::vector<ConvexObstacle>& obstacles() const { return obstacles_; }

  SegmentCheckMode segment_check_mode() const { return segment_mode_; }
  double sampled_step_fraction() const { return sampled_step_fraction_; }
  /// step is a fraction of the domain diagonal (default 1e-3).
  void set_segment_check_mode(SegmentCheckMode mode, double step_fraction = 1e-3);

 private:
  Box domain_;
  std::vector<ConvexObstacle> obstacles_;
  SegmentCheckMode segment_mode_ = SegmentCheckMode::Exact;
  double sampled_step_fraction_ = 1e-3;
};

/// Aq ≤ b + 1e-9 componentwise. Throws DimensionError on mismatch.
bool polytope_contains(const HPolytope& P, const Point& q);

/// q inside an obstacle (membership with tol 1e-9; boundary collides).
bool point_in_obstacle(const ConvexObstacle& o, const Point& q);

/// q ∈ C_free(env).
bool point_in_free_space(const Environment& env, const Point& q);

/// Closed segment [q, q2] stays in C_free. Both endpoints must be free
/// (throws GeometryError otherwise). Exact mode decides sphere obstacles by
/// the point-segment distance closed form and polytope obstacles by the
/// feasibility of the one-dimensional restriction of Ax ≤ b to the segment.
bool segment_in_free_space(const Environment& env, const Point& q,
                           const Point& q2);

/// P ∩ o = ∅, decided exactly: stacked-inequality LP for polytope obstacles,
/// metric projection for spheres. Tangency counts as intersection.
/// Throws GeometryError when P is unbounded.
bool region_obstacle_disjoint(const HPolytope& P, const ConvexObstacle& o);

/// Exact helper shared by the segment predicate: does the segment
/// q + t(q2−q), t ∈ [0,1], meet {x : Ax ≤ b + tol}?
bool segment_intersects_polytope(const HPolytope& P, const Point& q,
                                 const Point& q2, double tol = kGeomTol);

/// Minimum Euclidean distance from point c to the closed segment [q, q2].
double point_segment_distance(const Point& c, const Point& q, const Point& q2);

/// True iff {x : Ax ≤ b} is bounded (2n support LPs).
bool polytope_bounded(const HPolytope& P);

}  // namespace polycover
