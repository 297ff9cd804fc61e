#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "banachproj/space.hpp"

namespace banachproj {

class ConvexSet;

/// Axis-aligned box, lower_i <= upper_i.
struct Box {
  Point lower;
  Point upper;
};

/// Closed ball of the ambient p-norm.
struct Ball {
  Point center;
  double radius;
};

/// Convex hull of a nonempty vertex list.
struct VPolytope {
  std::vector<Point> vertices;
};

struct Translate {
  std::shared_ptr<const ConvexSet> inner;
  Point shift;
};

enum class SetKind { Box, Ball, VPolytope, Translate };

const char* to_string(SetKind kind);

/// Immutable descriptor of a nonempty, closed, bounded convex set.
class ConvexSet {
 public:
  using Variant = std::variant<Box, Ball, VPolytope, Translate>;

  static ConvexSet box(Point lower, Point upper);
  static ConvexSet ball(Point center, double radius);
  static ConvexSet polytope(std::vector<Point> vertices);
  static ConvexSet translated(ConvexSet inner, Point shift);

  SetKind kind() const { return static_cast<SetKind>(value_.index()); }
  std::size_t dim() const;
  const Variant& variant() const { return value_; }

  const Box* as_box() const { return std::get_if<Box>(&value_); }
  const Ball* as_ball() const { return std::get_if<Ball>(&value_); }
  const VPolytope* as_polytope() const { return std::get_if<VPolytope>(&value_); }
  const Translate* as_translate() const { return std::get_if<Translate>(&value_); }

  /// Equivalent descriptor with every Translate folded into its payload.
  ConvexSet resolved() const;

  bool operator==(const ConvexSet& other) const;

 private:
  explicit ConvexSet(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

inline constexpr double kMembershipTolerance = 1e-9;

bool membership(const SpaceSpec& space, const ConvexSet& set, const Point& x,
                double tol = kMembershipTolerance);

/// Minimizer of <c, .> over the set. Throws std::invalid_argument if c = 0.
Point linear_min_oracle(const SpaceSpec& space, const ConvexSet& set,
                        const DualVector& c);

/// The set shifted by t. Base variants stay in their own kind.
ConvexSet translate(const ConvexSet& set, const Point& t);

/// Vertices of a box or polytope (after resolving translates). Boxes are
/// enumerated, so dimension is capped at kMaxBoxEnumerationDim.
inline constexpr std::size_t kMaxBoxEnumerationDim = 16;
std::vector<Point> extreme_points(const ConvexSet& set);

/// Hausdorff distance reported as a certified interval [lower, upper].
/// `method` is "closed_form", "vertex" (vertex enumeration with certified
/// projections) or "sampled" (extreme-point sampling of a ball with a
/// covering-radius correction on the upper end).
struct HausdorffDistance {
  double lower = 0.0;
  double upper = 0.0;
  std::string method;

  double value() const { return upper; }
};

/// Certified interval for sup_{z in from} dist(z, to).
HausdorffDistance one_sided_deviation(const SpaceSpec& space,
                                      const ConvexSet& from,
                                      const ConvexSet& to, double tol);

HausdorffDistance hausdorff_distance(const SpaceSpec& space,
                                     const ConvexSet& s1, const ConvexSet& s2,
                                     double tol = 1e-10);

/// dist(origin, set) in the ambient norm. Exact for boxes and balls; an
/// upper bound within the solver certificate for polytopes.
double dist_to_origin(const SpaceSpec& space, const ConvexSet& set,
                      double tol = 1e-10);

}  // namespace banachproj
