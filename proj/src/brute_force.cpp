#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "banachproj/projection.hpp"

namespace banachproj {

namespace {

struct Best {
  const SpaceSpec& space;
  const Point& x;
  Point point;
  double value = std::numeric_limits<double>::infinity();
  std::size_t samples = 0;

  void offer(const Point& z) {
    ++samples;
    const double v = lp_norm((x - z).view(), space.p());
    if (v < value) {
      value = v;
      point = z;
    }
  }
};

double cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; counter-clockwise, collinear points dropped.
std::vector<Point> hull_2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0.0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Every point with barycentric weights in (1/k) Z over the simplex.
void sample_simplex(const std::vector<Point>& corners, int k, Best& best) {
  const std::size_t m = corners.size();
  std::vector<int> w(m, 0);
  // Enumerate compositions of k into m parts.
  auto emit = [&]() {
    Point z = Point::zeros(corners.front().size());
    for (std::size_t j = 0; j < m; ++j) {
      if (w[j] == 0) continue;
      const double lam = static_cast<double>(w[j]) / k;
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += lam * corners[j][i];
    }
    best.offer(z);
  };
  auto rec = [&](auto&& self, std::size_t j, int left) -> void {
    if (j + 1 == m) {
      w[j] = left;
      emit();
      return;
    }
    for (int c = 0; c <= left; ++c) {
      w[j] = c;
      self(self, j + 1, left - c);
    }
  };
  rec(rec, 0, k);
}

double max_edge(const SpaceSpec& space, const std::vector<Point>& corners) {
  double e = 0.0;
  for (std::size_t a = 0; a < corners.size(); ++a)
    for (std::size_t b = a + 1; b < corners.size(); ++b)
      e = std::max(e, norm(space, corners[a] - corners[b]));
  return e;
}

}  // namespace

BruteForceResult brute_force_project(const SpaceSpec& space,
                                     const ConvexSet& set, const Point& x,
                                     int grid) {
  require_dim(space, x.size(), "brute_force_project");
  require_dim(space, set.dim(), "brute_force_project(set)");
  const std::size_t n = space.dim();
  if (n > kMaxBruteForceDim)
    throw std::invalid_argument("brute_force_project: dimension too large for exhaustive search");
  if (grid < 1) throw std::invalid_argument("brute_force_project: grid must be >= 1");

  const ConvexSet r = set.resolved();
  Best best{space, x, Point::zeros(n)};
  BruteForceResult out;

  auto lattice = [&](const Point& lo, const Point& hi, auto&& visit) {
    std::vector<int> idx(n, 0);
    while (true) {
      Point z = lo;
      for (std::size_t i = 0; i < n; ++i)
        z[i] = lo[i] + (hi[i] - lo[i]) * static_cast<double>(idx[i]) / grid;
      visit(z);
      std::size_t i = 0;
      while (i < n && ++idx[i] > grid) idx[i++] = 0;
      if (i == n) break;
    }
  };
  auto half_steps = [&](const Point& lo, const Point& hi) {
    Point h = Point::zeros(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = 0.5 * (hi[i] - lo[i]) / grid;
    return norm(space, h);
  };

  if (const Box* b = r.as_box()) {
    lattice(b->lower, b->upper, [&](const Point& z) { best.offer(z); });
    out.resolution = half_steps(b->lower, b->upper);
  } else if (const Ball* b = r.as_ball()) {
    Point lo = b->center, hi = b->center;
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] -= b->radius;
      hi[i] += b->radius;
    }
    lattice(lo, hi, [&](const Point& z) {
      const Point rel = z - b->center;
      const double d = norm(space, rel);
      if (d <= b->radius)
        best.offer(z);
      else
        best.offer(b->center + (b->radius / d) * rel);
    });
    // Outside lattice points are pulled radially onto the sphere, which at
    // most doubles the lattice covering radius.
    out.resolution = 2.0 * half_steps(lo, hi);
  } else {
    const std::vector<Point>& verts = r.as_polytope()->vertices;
    if (n == 2) {
      const std::vector<Point> h = hull_2d(verts);
      if (h.size() < 3) {
        // Degenerate hull: a point or a segment.
        sample_simplex(h, grid, best);
        out.resolution = max_edge(space, h) / grid;
      } else {
        for (std::size_t i = 1; i + 1 < h.size(); ++i) {
          const std::vector<Point> tri{h[0], h[i], h[i + 1]};
          sample_simplex(tri, grid, best);
          out.resolution = std::max(out.resolution, max_edge(space, tri) / grid);
        }
      }
    } else {
      // Caratheodory: the hull is the union of simplices on n+1 vertices.
      const std::size_t m = verts.size();
      const std::size_t pick = std::min(m, n + 1);
      std::vector<bool> mask(m, false);
      std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(pick), true);
      do {
        std::vector<Point> corners;
        for (std::size_t j = 0; j < m; ++j)
          if (mask[j]) corners.push_back(verts[j]);
        sample_simplex(corners, grid, best);
        out.resolution = std::max(out.resolution,
                                  static_cast<double>(std::max<std::size_t>(1, n)) *
                                      max_edge(space, corners) / grid);
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
  }
  out.point = std::move(best.point);
  out.samples = best.samples;
  return out;
}

}  // namespace banachproj
