#include <algorithm>
#include <cmath>

#include "banachproj/convex_sets.hpp"
#include "banachproj/projection.hpp"

namespace banachproj {

namespace {

constexpr std::size_t kSphereSampleCap = 20000;
constexpr std::size_t kSphereSampleCapSolver = 2000;

// max over the box of ||z - c||_p; separable, attained coordinatewise at an
// endpoint.
double farthest_in_box(const SpaceSpec& space, const Box& b, const Point& c) {
  Point far = Point::zeros(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    far[i] = std::max(std::abs(b.lower[i] - c[i]), std::abs(b.upper[i] - c[i]));
  return norm(space, far);
}

double interval_gap(double a, double lo, double hi) {
  if (a < lo) return lo - a;
  if (a > hi) return a - hi;
  return 0.0;
}

// sup over z in `from` of dist(z, to) for two boxes. dist(z, to)^p is a sum of
// per-coordinate terms, each maximized at an endpoint of the coordinate range.
double box_to_box(const SpaceSpec& space, const Box& from, const Box& to) {
  Point worst = Point::zeros(from.lower.size());
  for (std::size_t i = 0; i < worst.size(); ++i)
    worst[i] = std::max(interval_gap(from.lower[i], to.lower[i], to.upper[i]),
                        interval_gap(from.upper[i], to.lower[i], to.upper[i]));
  return norm(space, worst);
}

HausdorffDistance exact(double v) { return {v, v, "closed_form"}; }

// Deviation from a finite vertex set, one certified projection per vertex.
// An unconverged projection still returns a feasible point, so its distance
// stays an upper bound and distance_lower_bound stays a lower bound; the
// interval just widens.
HausdorffDistance from_vertices(const SpaceSpec& space,
                                const std::vector<Point>& verts,
                                const ConvexSet& to, double tol) {
  HausdorffDistance out{0.0, 0.0, "vertex"};
  ProjectOptions opts;
  opts.tol = tol;
  bool closed = to.as_box() != nullptr || to.as_ball() != nullptr;
  for (const auto& v : verts) {
    ProjectionResult pr = project(space, to, v, opts);
    if (!pr.converged) {
      opts.max_iter *= 4;
      pr = project(space, to, v, opts);
      opts.max_iter /= 4;
    }
    out.upper = std::max(out.upper, pr.distance);
    out.lower = std::max(out.lower, closed ? pr.distance : distance_lower_bound(pr));
  }
  if (closed) out.method = "closed_form";
  return out;
}

// Deviation of a ball from a set by sampling its sphere. The sample is the
// radial image of a lattice on the surface of [-1,1]^n with m intervals per
// axis; its covering radius on the sphere is r * n^{1/p} * (2/m).
HausdorffDistance from_ball(const SpaceSpec& space, const Ball& ball,
                            const ConvexSet& to, double tol) {
  const std::size_t n = space.dim();
  ProjectOptions opts;
  opts.tol = tol;
  const bool cheap = to.as_box() != nullptr || to.as_ball() != nullptr;
  const std::size_t cap = cheap ? kSphereSampleCap : kSphereSampleCapSolver;

  // Trivially, dist(z, to) <= ||z - c|| + dist(c, to) <= r + dist(c, to).
  const ProjectionResult at_center = project(space, to, ball.center, opts);
  const double trivial = ball.radius + at_center.distance;

  std::size_t m = 0;
  for (std::size_t cand = 1; cand < 4096; ++cand) {
    const double count = 2.0 * n * std::pow(static_cast<double>(cand + 1), n - 1.0);
    if (count > static_cast<double>(cap)) break;
    m = cand;
  }

  HausdorffDistance out{0.0, trivial, "sampled"};
  out.lower = distance_lower_bound(at_center);  // the center is in the ball
  if (m == 0) {
    // Dimension too high for a covering lattice; use axis directions only.
    for (std::size_t j = 0; j < n; ++j) {
      for (double sgn : {-1.0, 1.0}) {
        Point z = ball.center;
        z[j] += sgn * ball.radius;
        const ProjectionResult pr = project(space, to, z, opts);
        out.lower = std::max(out.lower, cheap ? pr.distance : distance_lower_bound(pr));
      }
    }
    out.upper = std::max(trivial, out.lower);
    return out;
  }

  double sampled_max = 0.0;
  std::vector<std::size_t> idx(n - 1, 0);
  for (std::size_t axis = 0; axis < n; ++axis) {
    for (double sgn : {-1.0, 1.0}) {
      std::fill(idx.begin(), idx.end(), 0);
      while (true) {
        Point w = Point::zeros(n);
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == axis) {
            w[i] = sgn;
          } else {
            w[i] = -1.0 + 2.0 * static_cast<double>(idx[k++]) / static_cast<double>(m);
          }
        }
        const Point z = ball.center + (ball.radius / norm(space, w)) * w;
        const ProjectionResult pr = project(space, to, z, opts);
        sampled_max = std::max(sampled_max, pr.distance);
        out.lower = std::max(out.lower, cheap ? pr.distance : distance_lower_bound(pr));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] > m) idx[i++] = 0;
        if (i == idx.size()) break;
      }
    }
  }
  const double covering = ball.radius * std::pow(static_cast<double>(n), 1.0 / space.p()) *
                          (2.0 / static_cast<double>(m));
  out.upper = std::max(out.lower, std::min(trivial, sampled_max + covering));
  return out;
}

}  // namespace

HausdorffDistance one_sided_deviation(const SpaceSpec& space,
                                      const ConvexSet& from_set,
                                      const ConvexSet& to_set, double tol) {
  require_dim(space, from_set.dim(), "hausdorff_distance");
  require_dim(space, to_set.dim(), "hausdorff_distance");
  const ConvexSet from = from_set.resolved();
  const ConvexSet to = to_set.resolved();

  if (const Ball* a = from.as_ball()) {
    if (const Ball* b = to.as_ball())
      return exact(std::max(0.0, norm(space, a->center - b->center) + a->radius - b->radius));
    return from_ball(space, *a, to, tol);
  }
  if (const Box* a = from.as_box()) {
    if (const Box* b = to.as_box()) return exact(box_to_box(space, *a, *b));
    if (const Ball* b = to.as_ball())
      return exact(std::max(0.0, farthest_in_box(space, *a, b->center) - b->radius));
  }
  return from_vertices(space, extreme_points(from), to, tol);
}

HausdorffDistance hausdorff_distance(const SpaceSpec& space, const ConvexSet& s1,
                                     const ConvexSet& s2, double tol) {
  if (s1 == s2) return exact(0.0);
  const HausdorffDistance a = one_sided_deviation(space, s1, s2, tol);
  const HausdorffDistance b = one_sided_deviation(space, s2, s1, tol);
  HausdorffDistance out;
  out.lower = std::max(a.lower, b.lower);
  out.upper = std::max(a.upper, b.upper);
  if (a.method == "sampled" || b.method == "sampled")
    out.method = "sampled";
  else if (a.method == "vertex" || b.method == "vertex")
    out.method = "vertex";
  else
    out.method = "closed_form";
  return out;
}

double dist_to_origin(const SpaceSpec& space, const ConvexSet& set, double tol) {
  ProjectOptions opts;
  opts.tol = tol;
  const ProjectionResult pr = project(space, set, Point::zeros(space.dim()), opts);
  if (!pr.converged) {
    opts.max_iter *= 4;
    const ProjectionResult retry = project(space, set, Point::zeros(space.dim()), opts);
    if (!retry.converged)
      throw std::runtime_error("dist_to_origin: projection did not converge");
    return retry.distance;
  }
  return pr.distance;
}

}  // namespace banachproj
