#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace banachproj {

/// Raised when two coordinate sequences that must share a dimension do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The ambient space l_p^n. Both p and its conjugate q lie strictly in (1, inf).
class SpaceSpec {
 public:
  SpaceSpec(std::size_t dim, double p);

  std::size_t dim() const { return dim_; }
  double p() const { return p_; }
  double q() const { return q_; }
  bool hilbert() const { return p_ == 2.0; }

  /// The dual space l_q^n.
  SpaceSpec dual() const { return SpaceSpec(dim_, q_); }

 private:
  std::size_t dim_;
  double p_;
  double q_;
};

double conjugate_exponent(double p);

// Primal and dual coordinates are distinct types so a functional is never
// silently used as a point.
struct Point {
  std::vector<double> coords;

  Point() = default;
  explicit Point(std::vector<double> c) : coords(std::move(c)) {}
  Point(std::initializer_list<double> c) : coords(c) {}
  static Point zeros(std::size_t n) { return Point(std::vector<double>(n, 0.0)); }

  std::size_t size() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }
  std::span<const double> view() const { return coords; }
  bool operator==(const Point&) const = default;
};

struct DualVector {
  std::vector<double> coords;

  DualVector() = default;
  explicit DualVector(std::vector<double> c) : coords(std::move(c)) {}
  DualVector(std::initializer_list<double> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }
  std::span<const double> view() const { return coords; }
  bool operator==(const DualVector&) const = default;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double s, const Point& a);
DualVector operator-(const DualVector& a, const DualVector& b);
DualVector operator*(double s, const DualVector& a);

/// Constant of Figiel's modulus scaling inequality. Admissible range (1, 3.18].
class FigielConstant {
 public:
  static constexpr double kDefault = 3.18;

  FigielConstant() = default;
  explicit FigielConstant(double value);

  double value() const { return value_; }

 private:
  double value_ = kDefault;
};

void require_dim(const SpaceSpec& space, std::size_t n, const char* what);

/// p-norm of raw coordinates, scaled against overflow and underflow.
double lp_norm(std::span<const double> v, double p);

double norm(const SpaceSpec& space, const Point& x);
/// Norm of a functional, measured with the conjugate exponent q.
double dual_norm(const SpaceSpec& space, const DualVector& w);
double dual_pairing(const DualVector& w, const Point& v);

/// Normalized duality map J: <Jx, x> = ||x||^2 and ||Jx||_q = ||x||_p.
DualVector duality_map(const SpaceSpec& space, const Point& x);

/// The unnormalized map phi(t)_i = |t_i|^{p-1} sign(t_i), the gradient of
/// (1/p)||t||_p^p. J(t) = ||t||^{2-p} phi(t).
DualVector power_map(const SpaceSpec& space, const Point& t);

// ---------------------------------------------------------------------------
// Moduli of convexity
// ---------------------------------------------------------------------------

/// Lower-bound modulus of convexity used for an l_r space. For r >= 2 this is
/// Clarkson's exact L_r modulus 1 - (1 - (eps/2)^r)^{1/r}; for 1 < r < 2 it
/// is the quadratic bound (r - 1) eps^2 / 8.
double modulus_convexity(double r, double eps);

/// g(eps) = delta(eps) / eps on (0, 2].
double g_fn(double r, double eps);

inline constexpr double kInverseTolerance = 1e-10;

class NonMonotoneFunction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inverts a strictly increasing function f on [0, 2] by bisection.
///
/// Returns the upper end of the final bracket, so f(result) >= v and the
/// result is never an underestimate of the true preimage. Returns nullopt
/// (vacuous) when v exceeds f(2): no argument in range attains v.
/// Throws NonMonotoneFunction if f is not increasing on a bracketing grid.
template <typename F>
std::optional<double> inverse_monotone(F&& f, double v,
                                       double tol = kInverseTolerance);

double figiel_check(double r, double eps, double eta,
                    FigielConstant L = FigielConstant());

/// Sampling estimate of the modulus of l_p^n: min of 1 - ||(x+y)/2|| over
/// sampled unit pairs with ||x - y|| >= eps. An upper estimate of the true
/// modulus of the finite-dimensional space.
double estimate_modulus_empirical(const SpaceSpec& space, double eps,
                                  std::size_t samples, std::uint64_t seed);

/// delta and g for one exponent, with their inverses.
class Modulus {
 public:
  explicit Modulus(double r) : r_(r) {}

  double exponent() const { return r_; }
  double delta(double eps) const { return modulus_convexity(r_, eps); }
  double g(double eps) const { return g_fn(r_, eps); }

  std::optional<double> delta_inverse(double v,
                                      double tol = kInverseTolerance) const;
  std::optional<double> g_inverse(double v,
                                  double tol = kInverseTolerance) const;

 private:
  double r_;
};

// ---------------------------------------------------------------------------

namespace detail {
void check_bracketing_grid(const std::vector<double>& values);
}

template <typename F>
std::optional<double> inverse_monotone(F&& f, double v, double tol) {
  if (!(v >= 0.0)) throw std::invalid_argument("inverse_monotone: v must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("inverse_monotone: tol must be > 0");

  constexpr int kGrid = 32;
  std::vector<double> grid(kGrid);
  for (int k = 0; k < kGrid; ++k) grid[k] = f(2.0 * (k + 1) / kGrid);
  detail::check_bracketing_grid(grid);

  if (v == 0.0) return 0.0;
  const double top = grid.back();
  if (v > top) return std::nullopt;

  // Narrow the bracket from the grid before bisecting.
  double lo = 0.0, hi = 2.0;
  for (int k = 0; k < kGrid; ++k) {
    if (grid[k] >= v) {
      hi = 2.0 * (k + 1) / kGrid;
      lo = 2.0 * k / kGrid;
      break;
    }
  }
  // Absolute tolerance on the argument, tightened relative to hi so tiny
  // preimages keep their leading digits.
  for (int it = 0; it < 400; ++it) {
    if (hi - lo <= tol && hi - lo <= 1e-9 * hi) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (lo > 0.0 && hi / lo > 4.0) {
      // geometric split when the bracket spans orders of magnitude
      const double gm = std::sqrt(lo * hi);
      (f(gm) >= v ? hi : lo) = gm;
      continue;
    }
    if (lo == 0.0 && hi > 1e-300) {
      const double probe = hi * 0.25;
      if (f(probe) >= v) {
        hi = probe;
        continue;
      }
      lo = probe;
      continue;
    }
    (f(mid) >= v ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace banachproj
