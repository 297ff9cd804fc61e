// Independent reference computations for the tests. Nothing here calls into
// the library's numerics beyond plain data types.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

inline double pnorm(const Vec& x, double p) {
  double s = 0.0;
  for (double v : x) s += std::pow(std::fabs(v), p);
  return std::pow(s, 1.0 / p);
}

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec axpy(double s, const Vec& a, const Vec& b) {  // s*a + b
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i] + b[i];
  return r;
}

/// Gradient of (1/2)||x||_p^2 by central differences.
inline Vec half_square_gradient(const Vec& x, double p, double h = 1e-6) {
  Vec g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vec a = x, b = x;
    a[i] += h;
    b[i] -= h;
    const double fa = 0.5 * std::pow(pnorm(a, p), 2);
    const double fb = 0.5 * std::pow(pnorm(b, p), 2);
    g[i] = (fa - fb) / (2 * h);
  }
  return g;
}

inline Vec uniform(std::size_t n, double a, double b, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(a, b);
  Vec x(n);
  for (auto& v : x) v = u(rng);
  return x;
}

/// Point on the unit p-sphere (not uniformly distributed; covers all orthants).
inline Vec unit_sphere(std::size_t n, double p, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec x(n);
  double s = 0.0;
  while (s == 0.0) {
    for (auto& v : x) v = g(rng);
    s = pnorm(x, p);
  }
  for (auto& v : x) v /= s;
  return x;
}

inline double hilbert_modulus(double eps) { return 1.0 - std::sqrt(1.0 - eps * eps / 4.0); }

/// Minimizer of a convex function on [a, b] by golden-section search.
inline double golden_min(const std::function<double(double)>& f, double a, double b,
                         int iters = 200) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  for (int k = 0; k < iters && b - a > 1e-15; ++k) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

/// Convex hull of 2-D points, counterclockwise (monotone chain).
inline std::vector<Vec> hull2d(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

inline bool inside_hull2d(const std::vector<Vec>& h, const Vec& x) {
  if (h.size() < 3) return false;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Vec& a = h[i];
    const Vec& b = h[(i + 1) % h.size()];
    if ((b[0] - a[0]) * (x[1] - a[1]) - (b[1] - a[1]) * (x[0] - a[0]) < -1e-12) return false;
  }
  return true;
}

/// p-norm nearest point of a 2-D polygon: x itself when inside, otherwise
/// the best point over all boundary edges (each a 1-D convex problem).
inline Vec nearest_in_polygon(const std::vector<Vec>& vertices, const Vec& x, double p) {
  const std::vector<Vec> h = hull2d(vertices);
  if (inside_hull2d(h, x)) return x;
  Vec best = h[0];
  double best_d = pnorm(sub(x, best), p);
  const std::size_t m = h.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec& a = h[i];
    const Vec& b = h[(i + 1) % m];
    auto at = [&](double s) { return axpy(s, sub(b, a), a); };
    const double s = golden_min([&](double s) { return pnorm(sub(x, at(s)), p); }, 0.0, 1.0);
    const Vec z = at(s);
    const double d = pnorm(sub(x, z), p);
    if (d < best_d) {
      best_d = d;
      best = z;
    }
  }
  return best;
}

/// Normalized duality map from its defining formula.
inline Vec duality(const Vec& x, double p) {
  const double n = pnorm(x, p);
  Vec j(x.size(), 0.0);
  if (n == 0.0) return j;
  for (std::size_t i = 0; i < x.size(); ++i)
    j[i] = std::pow(n, 2.0 - p) * std::pow(std::fabs(x[i]), p - 1.0) * (x[i] > 0 ? 1 : x[i] < 0 ? -1 : 0);
  return j;
}

/// max over the vertices of <J(x - xbar), v - xbar>.
inline double vertex_residual(const std::vector<Vec>& vertices, const Vec& x, const Vec& xbar,
                              double p) {
  const Vec j = duality(sub(x, xbar), p);
  double worst = -std::numeric_limits<double>::infinity();
  for (const Vec& v : vertices) worst = std::max(worst, dot(j, sub(v, xbar)));
  return worst;
}

}  // namespace oracle
