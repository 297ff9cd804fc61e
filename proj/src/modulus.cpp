#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "banachproj/space.hpp"

namespace banachproj {

namespace {

void require_exponent(double r) {
  if (!(r > 1.0) || !std::isfinite(r))
    throw std::invalid_argument("modulus: exponent must satisfy 1 < r < inf");
}

}  // namespace

double modulus_convexity(double r, double eps) {
  require_exponent(r);
  if (!(eps >= 0.0) || eps > 2.0)
    throw std::domain_error("modulus_convexity: eps must lie in [0, 2], got " +
                            std::to_string(eps));
  if (eps == 0.0) return 0.0;
  if (r < 2.0) return (r - 1.0) * eps * eps / 8.0;
  // 1 - (1 - a)^{1/r}, written to keep precision for small a
  const double a = std::pow(eps / 2.0, r);
  return -std::expm1(std::log1p(-a) / r);
}

double g_fn(double r, double eps) {
  if (!(eps > 0.0)) throw std::domain_error("g_fn: eps must be positive");
  return modulus_convexity(r, eps) / eps;
}

namespace detail {

void check_bracketing_grid(const std::vector<double>& values) {
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (!(values[k] > values[k - 1]))
      throw NonMonotoneFunction(
          "inverse_monotone: function is not strictly increasing on the "
          "bracketing grid");
  }
}

}  // namespace detail

std::optional<double> Modulus::delta_inverse(double v, double tol) const {
  const double r = r_;
  return inverse_monotone([r](double e) { return modulus_convexity(r, e); }, v,
                          tol);
}

std::optional<double> Modulus::g_inverse(double v, double tol) const {
  const double r = r_;
  return inverse_monotone([r](double e) { return g_fn(r, e); }, v, tol);
}

double figiel_check(double r, double eps, double eta, FigielConstant L) {
  if (!(eps > 0.0) || eta > 2.0)
    throw std::domain_error("figiel_check: need 0 < eps <= eta <= 2");
  if (eta < eps) throw std::domain_error("figiel_check: eta < eps");
  return eps * eps * modulus_convexity(r, eta) -
         eta * eta * modulus_convexity(r, eps) / (4.0 * L.value());
}

namespace {

Point random_unit(const SpaceSpec& space, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Point x = Point::zeros(space.dim());
  double n = 0.0;
  while (n == 0.0) {
    for (auto& c : x.coords) c = gauss(rng);
    n = norm(space, x);
  }
  return (1.0 / n) * x;
}

Point normalized(const SpaceSpec& space, const Point& x) {
  return (1.0 / norm(space, x)) * x;
}

}  // namespace

double estimate_modulus_empirical(const SpaceSpec& space, double eps,
                                  std::size_t samples, std::uint64_t seed) {
  if (samples == 0)
    throw std::invalid_argument("estimate_modulus_empirical: samples = 0");
  if (!(eps > 0.0) || eps > 2.0)
    throw std::domain_error("estimate_modulus_empirical: eps must lie in (0, 2]");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.05, 0.6);

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < samples; ++s) {
    const Point x = random_unit(space, rng);
    if (eps == 2.0) {
      // Strict convexity leaves antipodal pairs as the only admissible ones.
      const Point mid = 0.5 * (x + (-1.0) * x);
      best = std::min(best, 1.0 - norm(space, mid));
      continue;
    }
    Point w = random_unit(space, rng);
    if (norm(space, x - w) < eps) {
      // Steer the target towards -x until it is far enough away.
      double tau = unif(rng);
      for (int k = 0; k < 60; ++k) {
        Point v = random_unit(space, rng);
        w = normalized(space, (-1.0) * x + tau * v);
        if (norm(space, x - w) >= eps) break;
        tau *= 0.5;
      }
      if (norm(space, x - w) < eps) continue;
    }
    // Walk the sphere arc from x to w; take the first crossing of eps from
    // above so the accepted pair satisfies ||x - y|| >= eps.
    auto arc = [&](double lam) {
      return normalized(space, (1.0 - lam) * x + lam * w);
    };
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (norm(space, x - arc(mid)) >= eps)
        hi = mid;
      else
        lo = mid;
    }
    const Point y = arc(hi);
    if (norm(space, x - y) < eps) continue;
    best = std::min(best, 1.0 - norm(space, 0.5 * (x + y)));
  }
  if (!std::isfinite(best))
    throw std::runtime_error("estimate_modulus_empirical: no admissible pair sampled");
  return best;
}

}  // namespace banachproj
