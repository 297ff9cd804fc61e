#pragma once

#include <cstddef>

#include "banachproj/convex_sets.hpp"

namespace banachproj {

enum class ProjectMethod {
  /// Closed form for boxes and balls, away-step conditional gradient for
  /// polytopes (warm-started from the Euclidean nearest point).
  Auto,
  /// Plain conditional gradient driven only by the linear minimization oracle.
  ConditionalGradient,
};

struct ProjectOptions {
  double tol = 1e-10;           // bound on vi_residual at convergence
  std::size_t max_iter = 50000;
  ProjectMethod method = ProjectMethod::Auto;
};

/// Nearest point of a set to x in the p-norm, with its certificate.
///
/// vi_residual is max over the set of <J(x - point), xi - point>. It is <= 0
/// exactly at the metric projection; `converged` means vi_residual <= tol.
/// The conditional-gradient gap of f(xi) = (1/p)||x - xi||_p^p relates to
/// it by gap = ||x - point||^{p-2} * vi_residual.
struct ProjectionResult {
  Point point;
  double distance = 0.0;
  double vi_residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

ProjectionResult project(const SpaceSpec& space, const ConvexSet& set,
                         const Point& x, const ProjectOptions& opts = {});

/// Worst violation of the variational characterization of the projection.
/// Throws std::invalid_argument if xbar is not in the set within
/// `membership_tol`.
double vi_residual(const SpaceSpec& space, const Point& x, const Point& xbar,
                   const ConvexSet& set, double membership_tol = 1e-7);

/// Certified lower bound on dist(x, set) from a feasible point and its
/// residual: convexity of the norm gives dist >= ||x - xbar|| - res/||x - xbar||.
double distance_lower_bound(const ProjectionResult& r);

struct BruteForceResult {
  Point point;
  double resolution = 0.0;  // covering radius of the sample, p-norm
  std::size_t samples = 0;
};

inline constexpr std::size_t kMaxBruteForceDim = 3;

/// Exhaustive minimization of ||x - xi||_p over a dense sample of the set.
/// Boxes and balls: uniform grid; polytopes: barycentric grid over a
/// triangulation of the hull (2-D) or over every vertex simplex (1-D, 3-D).
BruteForceResult brute_force_project(const SpaceSpec& space,
                                     const ConvexSet& set, const Point& x,
                                     int grid);

}  // namespace banachproj
