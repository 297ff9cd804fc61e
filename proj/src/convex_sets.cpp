#include "banachproj/convex_sets.hpp"

#include <algorithm>
#include <cmath>

#include "banachproj/polytope_nearest.hpp"
#include "banachproj/projection.hpp"

namespace banachproj {

const char* to_string(SetKind kind) {
  switch (kind) {
    case SetKind::Box: return "box";
    case SetKind::Ball: return "ball";
    case SetKind::VPolytope: return "vpolytope";
    case SetKind::Translate: return "translate";
  }
  return "unknown";
}

namespace {

void require_finite(const Point& p, const char* what) {
  for (double c : p.coords)
    if (!std::isfinite(c))
      throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
}

}  // namespace

ConvexSet ConvexSet::box(Point lower, Point upper) {
  if (lower.size() == 0) throw std::invalid_argument("box: empty coordinates");
  if (lower.size() != upper.size())
    throw DimensionMismatch("box: lower and upper sizes differ");
  require_finite(lower, "box.lower");
  require_finite(upper, "box.upper");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i])
      throw std::invalid_argument("box: lower exceeds upper at coordinate " +
                                  std::to_string(i));
  return ConvexSet(Box{std::move(lower), std::move(upper)});
}

ConvexSet ConvexSet::ball(Point center, double radius) {
  if (center.size() == 0) throw std::invalid_argument("ball: empty center");
  require_finite(center, "ball.center");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("ball: radius must be positive");
  return ConvexSet(Ball{std::move(center), radius});
}

ConvexSet ConvexSet::polytope(std::vector<Point> vertices) {
  if (vertices.empty()) throw std::invalid_argument("vpolytope: no vertices");
  const std::size_t n = vertices.front().size();
  if (n == 0) throw std::invalid_argument("vpolytope: empty vertex");
  for (const auto& v : vertices) {
    if (v.size() != n) throw DimensionMismatch("vpolytope: vertex sizes differ");
    require_finite(v, "vpolytope.vertex");
  }
  return ConvexSet(VPolytope{std::move(vertices)});
}

ConvexSet ConvexSet::translated(ConvexSet inner, Point shift) {
  if (shift.size() != inner.dim())
    throw DimensionMismatch("translate: shift dimension differs from set");
  require_finite(shift, "translate.shift");
  return ConvexSet(Translate{std::make_shared<const ConvexSet>(std::move(inner)),
                             std::move(shift)});
}

std::size_t ConvexSet::dim() const {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Box>) return s.lower.size();
        else if constexpr (std::is_same_v<T, Ball>) return s.center.size();
        else if constexpr (std::is_same_v<T, VPolytope>) return s.vertices.front().size();
        else return s.shift.size();
      },
      value_);
}

ConvexSet ConvexSet::resolved() const {
  const Translate* t = as_translate();
  if (t == nullptr) return *this;
  return translate(t->inner->resolved(), t->shift);
}

bool ConvexSet::operator==(const ConvexSet& other) const {
  if (value_.index() != other.value_.index()) return false;
  return std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        const T& b = std::get<T>(other.value_);
        if constexpr (std::is_same_v<T, Box>) return a.lower == b.lower && a.upper == b.upper;
        else if constexpr (std::is_same_v<T, Ball>) return a.center == b.center && a.radius == b.radius;
        else if constexpr (std::is_same_v<T, VPolytope>) return a.vertices == b.vertices;
        else return a.shift == b.shift && *a.inner == *b.inner;
      },
      value_);
}

ConvexSet translate(const ConvexSet& set, const Point& t) {
  if (t.size() != set.dim()) throw DimensionMismatch("translate: shift dimension");
  return std::visit(
      [&](const auto& s) -> ConvexSet {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Box>) {
          return ConvexSet::box(s.lower + t, s.upper + t);
        } else if constexpr (std::is_same_v<T, Ball>) {
          return ConvexSet::ball(s.center + t, s.radius);
        } else if constexpr (std::is_same_v<T, VPolytope>) {
          std::vector<Point> v;
          v.reserve(s.vertices.size());
          for (const auto& p : s.vertices) v.push_back(p + t);
          return ConvexSet::polytope(std::move(v));
        } else {
          return ConvexSet::translated(*s.inner, s.shift + t);
        }
      },
      set.variant());
}

bool membership(const SpaceSpec& space, const ConvexSet& set, const Point& x,
                double tol) {
  require_dim(space, x.size(), "membership");
  require_dim(space, set.dim(), "membership(set)");
  const ConvexSet r = set.resolved();
  if (const Box* b = r.as_box()) {
    Point gap = Point::zeros(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      gap[i] = x[i] - std::clamp(x[i], b->lower[i], b->upper[i]);
    return norm(space, gap) <= tol;
  }
  if (const Ball* b = r.as_ball()) return norm(space, x - b->center) <= b->radius + tol;
  const VPolytope& poly = *r.as_polytope();
  const HullNearest near = euclidean_nearest_in_hull(poly.vertices, x);
  if (norm(space, x - near.point) <= tol) return true;
  if (space.hilbert()) return false;
  // The Euclidean nearest point need not be p-nearest.
  ProjectOptions opts;
  opts.tol = 1e-12;
  return project(space, r, x, opts).distance <= tol;
}

Point linear_min_oracle(const SpaceSpec& space, const ConvexSet& set,
                        const DualVector& c) {
  require_dim(space, c.size(), "linear_min_oracle");
  require_dim(space, set.dim(), "linear_min_oracle(set)");
  if (std::all_of(c.coords.begin(), c.coords.end(), [](double v) { return v == 0.0; }))
    throw std::invalid_argument("linear_min_oracle: zero direction");
  return std::visit(
      [&](const auto& s) -> Point {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Box>) {
          Point out = s.lower;
          for (std::size_t i = 0; i < c.size(); ++i)
            out[i] = c[i] < 0.0 ? s.upper[i] : s.lower[i];
          return out;
        } else if constexpr (std::is_same_v<T, Ball>) {
          // w is the unit p-norm point with <c, w> = ||c||_q.
          const double cq = dual_norm(space, c);
          const double e = space.q() - 1.0;
          Point out = s.center;
          for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0.0) continue;
            const double w = std::copysign(std::pow(std::abs(c[i]) / cq, e), c[i]);
            out[i] -= s.radius * w;
          }
          return out;
        } else if constexpr (std::is_same_v<T, VPolytope>) {
          std::size_t best = 0;
          double best_val = dual_pairing(c, s.vertices[0]);
          for (std::size_t j = 1; j < s.vertices.size(); ++j) {
            const double v = dual_pairing(c, s.vertices[j]);
            if (v < best_val) {
              best_val = v;
              best = j;
            }
          }
          return s.vertices[best];
        } else {
          return linear_min_oracle(space, *s.inner, c) + s.shift;
        }
      },
      set.variant());
}

std::vector<Point> extreme_points(const ConvexSet& set) {
  const ConvexSet r = set.resolved();
  if (const VPolytope* p = r.as_polytope()) return p->vertices;
  if (const Box* b = r.as_box()) {
    const std::size_t n = b->lower.size();
    if (n > kMaxBoxEnumerationDim)
      throw std::invalid_argument("extreme_points: box dimension too large to enumerate");
    std::vector<Point> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Point v = b->lower;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) v[i] = b->upper[i];
      out.push_back(std::move(v));
    }
    return out;
  }
  throw std::invalid_argument("extreme_points: a ball has no finite vertex set");
}

}  // namespace banachproj
