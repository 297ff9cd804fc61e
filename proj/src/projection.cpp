#include "banachproj/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "banachproj/polytope_nearest.hpp"

namespace banachproj {

namespace {

constexpr int kLineSearchIterations = 60;

// <phi(r - gamma d), d>; the negated slope of f(xi + gamma d).
double descent_slope(const SpaceSpec& space, const Point& r, const Point& d,
                     double gamma) {
  const double e = space.p() - 1.0;
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double t = r[i] - gamma * d[i];
    if (t == 0.0) continue;
    s += std::copysign(std::pow(std::abs(t), e), t) * d[i];
  }
  return s;
}

// Exact minimizer of the strictly convex 1-D restriction on [0, gamma_max]
// by bisection on the sign of its derivative.
double line_search(const SpaceSpec& space, const Point& r, const Point& d,
                   double gamma_max) {
  if (descent_slope(space, r, d, gamma_max) >= 0.0) return gamma_max;
  double lo = 0.0, hi = gamma_max;
  for (int it = 0; it < kLineSearchIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (descent_slope(space, r, d, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// vi_residual from the conditional-gradient gap of (1/p)||r||^p.
double normalized_gap(const SpaceSpec& space, double gap, double dist) {
  if (dist == 0.0) return 0.0;
  return gap * std::pow(dist, 2.0 - space.p());
}

// Points reaching here are feasible by construction.
double residual_unchecked(const SpaceSpec& space, const Point& x,
                          const Point& xbar, const ConvexSet& set) {
  const DualVector j = duality_map(space, x - xbar);
  if (std::all_of(j.coords.begin(), j.coords.end(), [](double v) { return v == 0.0; }))
    return 0.0;
  const Point s = linear_min_oracle(space, set, (-1.0) * j);
  return dual_pairing(j, s - xbar);
}

ProjectionResult finish(const SpaceSpec& space, const ConvexSet& set,
                        const Point& x, Point point, std::size_t iterations,
                        double tol) {
  ProjectionResult out;
  out.distance = norm(space, x - point);
  out.vi_residual = residual_unchecked(space, x, point, set);
  out.point = std::move(point);
  out.iterations = iterations;
  out.converged = out.vi_residual <= tol;
  return out;
}

Point combination(const std::vector<Point>& verts, const std::vector<double>& w) {
  Point out = Point::zeros(verts.front().size());
  for (std::size_t j = 0; j < verts.size(); ++j) {
    if (w[j] == 0.0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += w[j] * verts[j][i];
  }
  return out;
}

ProjectionResult away_step(const SpaceSpec& space, const ConvexSet& set,
                           const std::vector<Point>& verts, const Point& x,
                           std::vector<double> alpha,
                           const ProjectOptions& opts) {
  const std::size_t m = verts.size();
  Point xi = combination(verts, alpha);
  std::vector<double> score(m);
  std::size_t it = 0;
  for (; it < opts.max_iter; ++it) {
    if (it % 64 == 63) xi = combination(verts, alpha);
    const Point r = x - xi;
    const double dist = norm(space, r);
    if (dist == 0.0) break;
    const DualVector phi = power_map(space, r);
    for (std::size_t j = 0; j < m; ++j) score[j] = dual_pairing(phi, verts[j]);
    const double at_xi = dual_pairing(phi, xi);

    std::size_t s = 0, a = m;
    for (std::size_t j = 1; j < m; ++j)
      if (score[j] > score[s]) s = j;
    for (std::size_t j = 0; j < m; ++j)
      if (alpha[j] > 0.0 && (a == m || score[j] < score[a])) a = j;

    const double gap_fw = score[s] - at_xi;
    if (normalized_gap(space, gap_fw, dist) <= opts.tol) break;
    const double gap_away = at_xi - score[a];

    if (gap_fw >= gap_away || alpha[a] >= 1.0) {
      const Point d = verts[s] - xi;
      const double gamma = line_search(space, r, d, 1.0);
      for (double& w : alpha) w *= (1.0 - gamma);
      alpha[s] += gamma;
      xi = xi + gamma * d;
    } else {
      const Point d = xi - verts[a];
      const double gmax = alpha[a] / (1.0 - alpha[a]);
      const double gamma = line_search(space, r, d, gmax);
      for (double& w : alpha) w *= (1.0 + gamma);
      alpha[a] -= gamma;
      if (gamma >= gmax || alpha[a] < 0.0) alpha[a] = 0.0;
      xi = xi + gamma * d;
    }
  }
  return finish(space, set, x, combination(verts, alpha), it, opts.tol);
}

ProjectionResult plain_conditional_gradient(const SpaceSpec& space,
                                            const ConvexSet& set, const Point& x,
                                            const ProjectOptions& opts) {
  Point xi = linear_min_oracle(space, set, DualVector(std::vector<double>(x.size(), 1.0)));
  std::size_t it = 0;
  for (; it < opts.max_iter; ++it) {
    const Point r = x - xi;
    const double dist = norm(space, r);
    if (dist == 0.0) break;
    const DualVector phi = power_map(space, r);
    const Point s = linear_min_oracle(space, set, (-1.0) * phi);
    const Point d = s - xi;
    const double gap = dual_pairing(phi, d);
    if (normalized_gap(space, gap, dist) <= opts.tol) break;
    const double gamma = line_search(space, r, d, 1.0);
    xi = xi + gamma * d;
  }
  return finish(space, set, x, std::move(xi), it, opts.tol);
}

}  // namespace

double vi_residual(const SpaceSpec& space, const Point& x, const Point& xbar,
                   const ConvexSet& set, double membership_tol) {
  require_dim(space, x.size(), "vi_residual");
  require_dim(space, xbar.size(), "vi_residual(xbar)");
  if (!membership(space, set, xbar, membership_tol))
    throw std::invalid_argument("vi_residual: xbar is not in the set");
  return residual_unchecked(space, x, xbar, set);
}

double distance_lower_bound(const ProjectionResult& r) {
  if (r.distance == 0.0) return 0.0;
  return std::max(0.0, r.distance - std::max(0.0, r.vi_residual) / r.distance);
}

ProjectionResult project(const SpaceSpec& space, const ConvexSet& set,
                         const Point& x, const ProjectOptions& opts) {
  require_dim(space, x.size(), "project");
  require_dim(space, set.dim(), "project(set)");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("project: tol must be positive");
  const ConvexSet r = set.resolved();

  if (opts.method == ProjectMethod::ConditionalGradient)
    return plain_conditional_gradient(space, r, x, opts);

  if (const Box* b = r.as_box()) {
    // The objective is separable, so clamping is exact in every p-norm.
    Point out = x;
    for (std::size_t i = 0; i < x.size(); ++i)
      out[i] = std::clamp(x[i], b->lower[i], b->upper[i]);
    return finish(space, r, x, std::move(out), 0, opts.tol);
  }
  if (const Ball* b = r.as_ball()) {
    const Point rel = x - b->center;
    const double n = norm(space, rel);
    if (n <= b->radius) return finish(space, r, x, x, 0, opts.tol);
    return finish(space, r, x, b->center + (b->radius / n) * rel, 0, opts.tol);
  }

  const VPolytope& poly = *r.as_polytope();
  const HullNearest warm = euclidean_nearest_in_hull(poly.vertices, x);
  double extent = 0.0;
  for (double c : x.coords) extent = std::max(extent, std::abs(c));
  for (const auto& v : poly.vertices)
    for (double c : v.coords) extent = std::max(extent, std::abs(c));
  if (warm.distance <= 1e-13 * (1.0 + extent))
    return finish(space, r, x, x, 0, opts.tol);
  if (space.hilbert()) {
    ProjectionResult res = finish(space, r, x, warm.point, 0, opts.tol);
    if (res.converged) return res;
  }
  return away_step(space, r, poly.vertices, x, warm.weights, opts);
}

}  // namespace banachproj
