#include <doctest.h>

#include <cmath>
#include <random>

#include "banachproj/convex_sets.hpp"
#include "banachproj/polytope_nearest.hpp"
#include "oracles.hpp"

using namespace banachproj;

namespace {

ConvexSet unit_box() { return ConvexSet::box(Point{0, 0}, Point{1, 1}); }

ConvexSet random_polytope(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<Point> v;
  const auto c = oracle::uniform(n, -3, 3, rng);
  for (std::size_t j = 0; j < m; ++j) v.push_back(Point(c) + Point(oracle::uniform(n, -2, 2, rng)));
  return ConvexSet::polytope(std::move(v));
}

/// Random point of the set by convex combination or coordinate sampling.
Point sample_in(const SpaceSpec& s, const ConvexSet& set, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  if (const Box* b = set.as_box()) {
    Point z = b->lower;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += u(rng) * (b->upper[i] - b->lower[i]);
    return z;
  }
  if (const Ball* b = set.as_ball()) {
    const auto d = oracle::unit_sphere(s.dim(), s.p(), rng);
    return b->center + (b->radius * u(rng)) * Point(d);
  }
  const auto& v = set.as_polytope()->vertices;
  std::vector<double> w(v.size());
  double t = 0;
  for (auto& x : w) t += (x = -std::log(u(rng) + 1e-300));
  Point z = Point::zeros(s.dim());
  for (std::size_t j = 0; j < v.size(); ++j) z = z + (w[j] / t) * v[j];
  return z;
}

}  // namespace

TEST_CASE("descriptor validation") {
  CHECK_THROWS(ConvexSet::box(Point{1, 0}, Point{0, 1}));
  CHECK_THROWS(ConvexSet::box(Point{0, 0}, Point{1}));
  CHECK_THROWS(ConvexSet::ball(Point{0, 0}, 0.0));
  CHECK_THROWS(ConvexSet::ball(Point{0, 0}, -1.0));
  CHECK_THROWS(ConvexSet::polytope({}));
  CHECK_THROWS(ConvexSet::polytope({Point{0, 0}, Point{1}}));
  CHECK_THROWS(ConvexSet::translated(unit_box(), Point{1}));
  CHECK(ConvexSet::polytope({Point{1, 2}}).dim() == 2);
  CHECK(std::string(to_string(SetKind::VPolytope)) == "vpolytope");
}

TEST_CASE("membership") {
  const SpaceSpec s2(2, 2.0), s3(2, 3.0);
  CHECK(membership(s2, unit_box(), Point{0.5, 0.5}));
  CHECK_FALSE(membership(s2, unit_box(), Point{1.1, 0.5}));
  CHECK_FALSE(membership(s3, ConvexSet::ball(Point{0, 0}, 1.0), Point{2, 0}));
  CHECK(membership(s3, ConvexSet::ball(Point{0, 0}, 1.0), Point{0.7, 0.7}));  // 0.7*2^(1/3) < 1
  const ConvexSet tri = ConvexSet::polytope({Point{0, 0}, Point{1, 0}, Point{0, 1}});
  CHECK_FALSE(membership(s2, tri, Point{1, 1}));
  CHECK(membership(s2, tri, Point{0.25, 0.25}));
  CHECK(membership(s2, tri, Point{0.5, 0.5}));
  CHECK_THROWS_AS(membership(s2, tri, Point{1, 1, 1}), DimensionMismatch);
}

TEST_CASE("linear minimization oracle") {
  const SpaceSpec s2(2, 2.0);
  CHECK(linear_min_oracle(s2, unit_box(), DualVector{1, -1}) == Point{0, 1});
  const ConvexSet tri = ConvexSet::polytope({Point{0, 0}, Point{2, 0}, Point{0, 2}});
  CHECK(linear_min_oracle(s2, tri, DualVector{-1, 0}) == Point{2, 0});
  const Point b = linear_min_oracle(s2, ConvexSet::ball(Point{0, 0}, 1.0), DualVector{3, 4});
  CHECK(b[0] == doctest::Approx(-0.6));
  CHECK(b[1] == doctest::Approx(-0.8));
  CHECK_THROWS(linear_min_oracle(s2, unit_box(), DualVector{0, 0}));

  const ConvexSet shifted = ConvexSet::translated(tri, Point{1, 1});
  CHECK(linear_min_oracle(s2, shifted, DualVector{-1, 0}) == Point{3, 1});

  std::mt19937_64 rng(21);
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    const SpaceSpec s(3, p);
    const std::vector<ConvexSet> sets{
        ConvexSet::box(Point{-1, 0, 2}, Point{1, 3, 2.5}),
        ConvexSet::ball(Point{1, -1, 0.5}, 1.7),
        random_polytope(3, 8, rng),
        ConvexSet::translated(ConvexSet::ball(Point{0, 0, 0}, 1.0), Point{2, 2, 2})};
    for (const ConvexSet& set : sets)
      for (int k = 0; k < 30; ++k) {
        const DualVector c(oracle::uniform(3, -2, 2, rng));
        const Point z = linear_min_oracle(s, set, c);
        CHECK(membership(s, set, z, 1e-9));
        const ConvexSet r = set.resolved();
        for (int m = 0; m < 50; ++m)
          CHECK(dual_pairing(c, z) <= dual_pairing(c, sample_in(s, r, rng)) + 1e-9);
      }
  }
}

TEST_CASE("translation") {
  const SpaceSpec s(2, 3.0);
  CHECK(translate(unit_box(), Point{0, 0}) == unit_box());
  CHECK(translate(unit_box(), Point{1, 1}) == ConvexSet::box(Point{1, 1}, Point{2, 2}));
  CHECK(translate(ConvexSet::ball(Point{0, 0}, 2), Point{1, -1}).kind() == SetKind::Ball);
  CHECK(ConvexSet::translated(unit_box(), Point{1, 1}).resolved() ==
        ConvexSet::box(Point{1, 1}, Point{2, 2}));
  std::mt19937_64 rng(2);
  const ConvexSet poly = random_polytope(2, 6, rng);
  for (int k = 0; k < 300; ++k) {
    const Point t(oracle::uniform(2, -1, 1, rng));
    const Point x(oracle::uniform(2, -5, 5, rng));
    CHECK(membership(s, translate(poly, t), x + t) == membership(s, poly, x));
  }
}

TEST_CASE("extreme points") {
  CHECK(extreme_points(unit_box()).size() == 4);
  CHECK(extreme_points(ConvexSet::translated(unit_box(), Point{1, 0})).size() == 4);
  CHECK_THROWS(extreme_points(ConvexSet::ball(Point{0, 0}, 1)));
}

TEST_CASE("Euclidean nearest point in a hull") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 200; ++k) {
    std::vector<oracle::Vec> raw;
    std::vector<Point> verts;
    for (int j = 0; j < 7; ++j) {
      raw.push_back(oracle::uniform(2, -2, 2, rng));
      verts.emplace_back(raw.back());
    }
    const auto x = oracle::uniform(2, -5, 5, rng);
    const HullNearest h = euclidean_nearest_in_hull(verts, Point(x));
    const auto ref = oracle::nearest_in_polygon(raw, x, 2.0);
    CHECK(h.point[0] == doctest::Approx(ref[0]).epsilon(1e-7).scale(1));
    CHECK(h.point[1] == doctest::Approx(ref[1]).epsilon(1e-7).scale(1));
    double wsum = 0;
    for (double w : h.weights) {
      CHECK(w >= -1e-12);
      wsum += w;
    }
    CHECK(wsum == doctest::Approx(1.0));
  }
  // degenerate: repeated and collinear vertices in higher dimension
  std::vector<Point> line{Point{0, 0, 0}, Point{1, 1, 1}, Point{1, 1, 1}, Point{2, 2, 2}};
  const HullNearest h = euclidean_nearest_in_hull(line, Point{3, 0, 0});
  CHECK(h.point[0] == doctest::Approx(1.0));
  CHECK(h.distance == doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("Hausdorff distance") {
  const SpaceSpec s2(2, 2.0);
  const HausdorffDistance boxes =
      hausdorff_distance(s2, unit_box(), ConvexSet::box(Point{0, 0}, Point{2, 1}));
  CHECK(boxes.lower == doctest::Approx(1.0));
  CHECK(boxes.upper == doctest::Approx(1.0));
  CHECK(hausdorff_distance(s2, unit_box(), unit_box()).upper == 0.0);

  std::mt19937_64 rng(9);
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    const SpaceSpec s(3, p);
    const std::vector<ConvexSet> sets{ConvexSet::box(Point{-1, 0, 2}, Point{1, 3, 2.5}),
                                      ConvexSet::ball(Point{1, -1, 0.5}, 1.7)};
    for (const ConvexSet& set : sets)
      for (int k = 0; k < 10; ++k) {
        const Point t(oracle::uniform(3, -0.5, 0.5, rng));
        const HausdorffDistance h = hausdorff_distance(s, set, translate(set, t));
        CHECK(h.lower == doctest::Approx(norm(s, t)).epsilon(1e-9));
        CHECK(h.upper == doctest::Approx(norm(s, t)).epsilon(1e-9));
      }
    // polytopes: symmetric, bracketed, triangle inequality
    for (int k = 0; k < 5; ++k) {
      const ConvexSet a = random_polytope(3, 6, rng), b = random_polytope(3, 6, rng),
                      c = random_polytope(3, 5, rng);
      const HausdorffDistance ab = hausdorff_distance(s, a, b);
      const HausdorffDistance ba = hausdorff_distance(s, b, a);
      CHECK(ab.lower <= ab.upper);
      CHECK(ab.upper == doctest::Approx(ba.upper).epsilon(1e-9));
      const double bc = hausdorff_distance(s, b, c).upper, ac = hausdorff_distance(s, a, c).upper;
      CHECK(ac <= ab.upper + bc + 2e-10);
    }
  }
}

TEST_CASE("Hausdorff interval for a ball against a polytope brackets a sampled estimate") {
  const SpaceSpec s(2, 3.0);
  const ConvexSet ball = ConvexSet::ball(Point{0, 0}, 1.0);
  const ConvexSet square =
      ConvexSet::polytope({Point{-1, -1}, Point{1, -1}, Point{1, 1}, Point{-1, 1}});
  const HausdorffDistance h = hausdorff_distance(s, ball, square);
  // the square contains the ball; the deviation is attained at a corner
  const double exact = std::pow(2.0, 1.0 / 3.0) * (1.0 - std::pow(2.0, -1.0 / 3.0));
  CHECK(h.lower <= exact + 1e-9);
  CHECK(h.upper >= exact - 1e-9);
  CHECK(h.upper - h.lower < 0.05);
}

TEST_CASE("Hausdorff interval survives unconverged projections") {
  const SpaceSpec s(3, 1.5);
  const ConvexSet a = ConvexSet::polytope(
      {Point{0, 0, 0}, Point{4, 0, 0}, Point{0, 2, 0}, Point{0, 0, 1}, Point{2, 1.5, 1}});
  const ConvexSet b =
      ConvexSet::polytope({Point{0, 0, 0}, Point{4, 0, 0}, Point{0, 2, 0}, Point{0, 0, 1}});
  const HausdorffDistance loose = hausdorff_distance(s, a, b, 1e-300);
  const HausdorffDistance tight = hausdorff_distance(s, a, b);
  CHECK(loose.lower <= tight.upper + 1e-12);
  CHECK(loose.upper >= tight.lower - 1e-12);
  CHECK(loose.lower > 0.0);
}

TEST_CASE("distance to the origin") {
  const SpaceSpec s2(2, 2.0);
  CHECK(dist_to_origin(s2, ConvexSet::box(Point{-1, -1}, Point{1, 1})) == 0.0);
  CHECK(dist_to_origin(SpaceSpec(2, 3.0), ConvexSet::ball(Point{3, 0}, 1.0)) == doctest::Approx(2.0));
  CHECK(dist_to_origin(s2, ConvexSet::polytope({Point{1, 1}, Point{2, 1}, Point{1, 2}})) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(dist_to_origin(SpaceSpec(2, 3.0), ConvexSet::polytope({Point{1, 1}, Point{2, 1}, Point{1, 2}})) ==
        doctest::Approx(std::cbrt(2.0)).epsilon(1e-8));
}
