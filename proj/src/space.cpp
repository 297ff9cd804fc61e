#include "banachproj/space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace banachproj {

double conjugate_exponent(double p) { return p / (p - 1.0); }

SpaceSpec::SpaceSpec(std::size_t dim, double p) : dim_(dim), p_(p), q_(0.0) {
  if (dim == 0) throw std::invalid_argument("SpaceSpec: dim must be positive");
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("SpaceSpec: p must satisfy 1 < p < inf, got " +
                                std::to_string(p));
  q_ = conjugate_exponent(p);
  if (!std::isfinite(q_))
    throw std::invalid_argument("SpaceSpec: dual exponent is not finite");
}

FigielConstant::FigielConstant(double value) : value_(value) {
  if (!(value > 1.0) || value > kDefault)
    throw std::invalid_argument("FigielConstant: L must lie in (1, 3.18]");
}

namespace {

template <typename V>
V add(const V& a, const V& b, double sb) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  V out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += sb * b[i];
  return out;
}

}  // namespace

Point operator+(const Point& a, const Point& b) { return add(a, b, 1.0); }
Point operator-(const Point& a, const Point& b) { return add(a, b, -1.0); }
Point operator*(double s, const Point& a) {
  Point out = a;
  for (auto& c : out.coords) c *= s;
  return out;
}
DualVector operator-(const DualVector& a, const DualVector& b) {
  return add(a, b, -1.0);
}
DualVector operator*(double s, const DualVector& a) {
  DualVector out = a;
  for (auto& c : out.coords) c *= s;
  return out;
}

void require_dim(const SpaceSpec& space, std::size_t n, const char* what) {
  if (n != space.dim())
    throw DimensionMismatch(std::string(what) + ": expected dimension " +
                            std::to_string(space.dim()) + ", got " +
                            std::to_string(n));
}

double lp_norm(std::span<const double> v, double p) {
  double scale = 0.0;
  for (double c : v) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  if (p == 2.0) {
    double s = 0.0;
    for (double c : v) {
      const double t = c / scale;
      s += t * t;
    }
    return scale * std::sqrt(s);
  }
  double s = 0.0;
  for (double c : v) s += std::pow(std::abs(c) / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

double norm(const SpaceSpec& space, const Point& x) {
  require_dim(space, x.size(), "norm");
  return lp_norm(x.view(), space.p());
}

double dual_norm(const SpaceSpec& space, const DualVector& w) {
  require_dim(space, w.size(), "dual_norm");
  return lp_norm(w.view(), space.q());
}

double dual_pairing(const DualVector& w, const Point& v) {
  if (w.size() != v.size())
    throw DimensionMismatch("dual_pairing: functional and point sizes differ");
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * v[i];
  return s;
}

DualVector duality_map(const SpaceSpec& space, const Point& x) {
  require_dim(space, x.size(), "duality_map");
  if (space.hilbert()) return DualVector(x.coords);
  const double nx = lp_norm(x.view(), space.p());
  DualVector out(std::vector<double>(x.size(), 0.0));
  if (nx == 0.0) return out;
  // ||x||^{2-p} |x_i|^{p-1} = ||x|| (|x_i| / ||x||)^{p-1}
  const double e = space.p() - 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) continue;
    out[i] = std::copysign(nx * std::pow(std::abs(x[i]) / nx, e), x[i]);
  }
  return out;
}

DualVector power_map(const SpaceSpec& space, const Point& t) {
  require_dim(space, t.size(), "power_map");
  DualVector out(std::vector<double>(t.size(), 0.0));
  const double e = space.p() - 1.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0.0) continue;
    out[i] = std::copysign(std::pow(std::abs(t[i]), e), t[i]);
  }
  return out;
}

}  // namespace banachproj
