#include <doctest.h>

#include <cmath>
#include <random>

#include "banachproj/projection.hpp"
#include "oracles.hpp"

using namespace banachproj;

namespace {

const double kExponents[] = {1.5, 2.0, 3.0, 4.0};

std::vector<oracle::Vec> raw_vertices(const ConvexSet& set) {
  std::vector<oracle::Vec> out;
  for (const Point& v : set.as_polytope()->vertices) out.push_back(v.coords);
  return out;
}

ConvexSet random_polytope(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<Point> v;
  const auto c = oracle::uniform(n, -3, 3, rng);
  for (std::size_t j = 0; j < m; ++j) v.push_back(Point(c) + Point(oracle::uniform(n, -2, 2, rng)));
  return ConvexSet::polytope(std::move(v));
}

}  // namespace

TEST_CASE("box projection is the clamp for every p") {
  const ConvexSet box = ConvexSet::box(Point{0, 0}, Point{1, 1});
  for (double p : kExponents) {
    const ProjectionResult r = project(SpaceSpec(2, p), box, Point{3, 4});
    CHECK(r.point == Point{1, 1});
    CHECK(r.converged);
    CHECK(r.vi_residual <= 1e-10);
    const ProjectionResult inside = project(SpaceSpec(2, p), box, Point{0.3, 0.9});
    CHECK(inside.point == Point{0.3, 0.9});
    CHECK(inside.distance == 0.0);
  }
}

TEST_CASE("ball projection is radial and optimal against sphere sampling") {
  std::mt19937_64 rng(31);
  for (double p : kExponents) {
    const SpaceSpec s(3, p);
    const ConvexSet ball = ConvexSet::ball(Point::zeros(3), 1.5);
    for (int k = 0; k < 20; ++k) {
      const auto xv = oracle::uniform(3, -5, 5, rng);
      const Point x(xv);
      const ProjectionResult r = project(s, ball, x);
      const double nx = oracle::pnorm(xv, p);
      for (std::size_t i = 0; i < 3; ++i) CHECK(r.point[i] == doctest::Approx(1.5 * xv[i] / nx));
      CHECK(r.distance == doctest::Approx(nx - 1.5));
      for (int m = 0; m < 2000; ++m) {
        const auto z = oracle::unit_sphere(3, p, rng);
        oracle::Vec zz(3);
        for (int i = 0; i < 3; ++i) zz[i] = 1.5 * z[i];
        CHECK(oracle::pnorm(oracle::sub(xv, zz), p) >= r.distance - 1e-12);
      }
    }
  }
}

TEST_CASE("2-D polytope projection matches the boundary-search oracle") {
  std::mt19937_64 rng(41);
  for (double p : kExponents) {
    const SpaceSpec s(2, p);
    for (int k = 0; k < 60; ++k) {
      const ConvexSet poly = random_polytope(2, 3 + k % 8, rng);
      const auto xv = oracle::uniform(2, -6, 6, rng);
      const ProjectionResult r = project(s, poly, Point(xv));
      REQUIRE(r.converged);
      const auto ref = oracle::nearest_in_polygon(raw_vertices(poly), xv, p);
      CHECK(oracle::pnorm(oracle::sub(r.point.coords, ref), p) <= 1e-5);
      CHECK(r.distance <= oracle::pnorm(oracle::sub(xv, ref), p) + 1e-9);
      CHECK(r.distance == doctest::Approx(norm(s, Point(xv) - r.point)).epsilon(1e-12));
    }
  }
}

TEST_CASE("polytope projection certificate in higher dimension") {
  std::mt19937_64 rng(43);
  for (double p : kExponents)
    for (std::size_t n : {3u, 8u, 20u}) {
      const SpaceSpec s(n, p);
      for (int k = 0; k < 8; ++k) {
        const ConvexSet poly = random_polytope(n, n + 1 + k, rng);
        const auto xv = oracle::uniform(n, -5, 5, rng);
        const ProjectionResult r = project(s, poly, Point(xv));
        REQUIRE(r.converged);
        CHECK(membership(s, poly, r.point, 1e-9));
        const double res = oracle::vertex_residual(raw_vertices(poly), xv, r.point.coords, p);
        CHECK(res <= 1e-10);
        CHECK(std::fabs(r.vi_residual - res) <= 1e-12 * (1 + r.distance * r.distance));
        // no sampled set point is nearer than the certified lower bound
        const double lb = distance_lower_bound(r);
        CHECK(lb <= r.distance);
        for (const Point& v : poly.as_polytope()->vertices) CHECK(norm(s, Point(xv) - v) >= lb);
      }
    }
}

TEST_CASE("plain conditional gradient agrees with the default solver") {
  std::mt19937_64 rng(45);
  const SpaceSpec s(2, 3.0);
  const ConvexSet poly = random_polytope(2, 6, rng);
  const Point x{6, -6};
  ProjectOptions plain;
  plain.method = ProjectMethod::ConditionalGradient;
  plain.tol = 1e-6;
  plain.max_iter = 200000;
  const ProjectionResult a = project(s, poly, x);
  const ProjectionResult b = project(s, poly, x, plain);
  CHECK(a.converged);
  CHECK(b.distance == doctest::Approx(a.distance).epsilon(1e-6));
  CHECK(b.distance >= a.distance - 1e-12);
}

TEST_CASE("iteration cap reports non-convergence") {
  const SpaceSpec s(3, 3.0);
  const ConvexSet poly =
      ConvexSet::polytope({Point{0, 0, 0}, Point{4, 0, 0}, Point{0, 2, 0}, Point{0, 0, 1}});
  ProjectOptions opts;
  opts.max_iter = 2;
  const ProjectionResult r = project(s, poly, Point{2, 1.5, 1}, opts);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations <= 2);
}

TEST_CASE("idempotence") {
  std::mt19937_64 rng(47);
  for (double p : kExponents) {
    const SpaceSpec s(4, p);
    for (int k = 0; k < 10; ++k) {
      const ConvexSet poly = random_polytope(4, 9, rng);
      const ProjectionResult r = project(s, poly, Point(oracle::uniform(4, -5, 5, rng)));
      const ProjectionResult again = project(s, poly, r.point);
      CHECK(norm(s, again.point - r.point) <= 1e-9);
    }
  }
}

TEST_CASE("variational residual") {
  const SpaceSpec s(2, 2.0);
  const ConvexSet box = ConvexSet::box(Point{0, 0}, Point{1, 1});
  CHECK(vi_residual(s, Point{0.5, 0.5}, Point{0.5, 0.5}, box) == 0.0);
  std::mt19937_64 rng(51);
  for (int k = 0; k < 200; ++k) {
    const auto lo = oracle::uniform(2, -3, 0, rng);
    const auto hi = oracle::uniform(2, 0, 3, rng);
    const ConvexSet b = ConvexSet::box(Point(lo), Point(hi));
    const auto x = oracle::uniform(2, -5, 5, rng);
    oracle::Vec xb(2);
    for (int i = 0; i < 2; ++i) xb[i] = std::clamp(x[i], lo[i], hi[i]);
    CHECK(vi_residual(s, Point(x), Point(xb), b) <= 1e-10);
  }
  // a vertex that is not the nearest one violates the characterization
  const ConvexSet tri = ConvexSet::polytope({Point{0, 0}, Point{2, 0}, Point{0, 2}});
  CHECK(vi_residual(SpaceSpec(2, 3.0), Point{3, 0.2}, Point{0, 2}, tri) > 0.0);
  CHECK_THROWS(vi_residual(s, Point{3, 3}, Point{2, 2}, box));
}

TEST_CASE("Hilbert properties of the projection") {
  std::mt19937_64 rng(53);
  const SpaceSpec s(5, 2.0);
  for (int k = 0; k < 50; ++k) {
    const ConvexSet poly = random_polytope(5, 9, rng);
    const Point x(oracle::uniform(5, -5, 5, rng)), y(oracle::uniform(5, -5, 5, rng));
    const ProjectionResult px = project(s, poly, x), py = project(s, poly, y);
    CHECK(oracle::dot((px.point - py.point).coords, (x - y).coords) >= -1e-9);
    CHECK(norm(s, px.point - py.point) <= norm(s, x - y) + 1e-6);
    for (const Point& xi : poly.as_polytope()->vertices) {
      const double a = std::pow(norm(s, px.point - xi), 2);
      const double b = std::pow(norm(s, x - xi), 2) - std::pow(px.distance, 2);
      CHECK(a <= b + 1e-6);
    }
  }
}

TEST_CASE("nonexpansiveness can fail away from p = 2") {
  // segment through the origin in l_4; the origin is its own projection
  const SpaceSpec s(2, 4.0);
  const ConvexSet seg = ConvexSet::polytope({Point{-2, -12}, Point{2, 12}});
  const Point x{-1.0, -1.3}, y{0, 0};
  const ProjectionResult px = project(s, seg, x), py = project(s, seg, y);
  REQUIRE(px.converged);
  CHECK(py.distance == 0.0);
  const double ratio = norm(s, px.point - py.point) / norm(s, x - y);
  CHECK(ratio == doctest::Approx(1.2097132876599066).epsilon(1e-6));
  CHECK(ratio > 1.0);
}

TEST_CASE("brute-force oracle") {
  const SpaceSpec s(2, 3.0);
  const ConvexSet box = ConvexSet::box(Point{0, 0}, Point{1, 1});
  const BruteForceResult b = brute_force_project(s, box, Point{3, 0.5}, 100);
  CHECK(norm(s, b.point - Point{1, 0.5}) <= 2 * b.resolution);
  const BruteForceResult self = brute_force_project(s, box, Point{0.25, 0.75}, 100);
  CHECK(norm(s, self.point - Point{0.25, 0.75}) <= b.resolution);
  const ConvexSet tri = ConvexSet::polytope({Point{0, 0}, Point{2, 0}, Point{0, 2}});
  const BruteForceResult t = brute_force_project(s, tri, Point{3, 3}, 200);
  CHECK(norm(s, t.point - Point{1, 1}) <= 2 * t.resolution);
  CHECK_THROWS(brute_force_project(SpaceSpec(4, 2.0), ConvexSet::box(Point::zeros(4), Point{1, 1, 1, 1}),
                                   Point::zeros(4), 10));
}
