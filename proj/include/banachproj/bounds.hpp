#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "banachproj/convex_sets.hpp"
#include "banachproj/projection.hpp"

namespace banachproj {

/// One instance of an inequality lhs <= rhs (or lhs >= rhs for Lemma 1,
/// stored with the sign convention that margin >= 0 means the claim holds).
///
/// rhs is nullopt when an inverse-function argument left the range of the
/// function on (0, 2]; such outcomes pass but carry no information.
struct BoundOutcome {
  double lhs = 0.0;
  std::optional<double> rhs;
  std::map<std::string, double> constants;
  bool informative = false;
  std::optional<double> margin;

  static BoundOutcome make(double lhs, std::optional<double> rhs, bool lower_bound);
};

/// Comparison tolerance absorbing solver and bisection error.
inline constexpr double kComparisonTolerance = 1e-7;

/// 2 max{1, sqrt((a^2 + b^2)/2)}.
double mean_square_constant(double a, double b);

/// <Jx - Jy, x - y> >= (2L)^{-1} delta_p(||x - y|| / C1).
BoundOutcome lemma1_outcome(const SpaceSpec& space, const Point& x,
                            const Point& y, FigielConstant L = {});

/// ||Jx - Jy||_q <= C g_q^{-1}(2 C L ||x - y||).
BoundOutcome lemma2_outcome(const SpaceSpec& space, const Point& x,
                            const Point& y, FigielConstant L = {});

/// C g_p^{-1}(2 L C^2 g_q^{-1}(2 C L t)); nullopt when either inverse is
/// out of range.
std::optional<double> theorem1_rhs(const SpaceSpec& space, double C, double t,
                                   FigielConstant L = {});

/// Variant with separate outer and inner constants:
/// C1 g_p^{-1}(2 L C1 C2 g_q^{-1}(2 C2 L t)).
std::optional<double> theorem1_rhs_split(const SpaceSpec& space, double C1,
                                         double C2, double t,
                                         FigielConstant L = {});

/// ||P x - P y|| against the argument-perturbation estimate. Throws
/// std::invalid_argument on unconverged projections.
BoundOutcome theorem1_outcome(const SpaceSpec& space, const ConvexSet& set,
                              const Point& x, const Point& y,
                              const ProjectionResult& px,
                              const ProjectionResult& py,
                              FigielConstant L = {});

/// Two sets and a verified upper bound on their Hausdorff distance.
struct SetPair {
  ConvexSet omega1;
  ConvexSet omega2;
  double sigma = 0.0;
};

/// ||P1 x - P2 x|| <= C1 delta^{-1}(4 L (d + r) sigma). The refined form
/// C1' delta^{-1}(4 L C2' sigma) is recorded under "rhs_refined".
BoundOutcome theorem2_outcome(const SpaceSpec& space, const SetPair& pair,
                              const Point& x, const ProjectionResult& p1,
                              const ProjectionResult& p2,
                              FigielConstant L = {});

/// Same instance as theorem2_outcome, judged against the refined bound.
BoundOutcome remark5_outcome(const SpaceSpec& space, const SetPair& pair,
                             const Point& x, const ProjectionResult& p1,
                             const ProjectionResult& p2, FigielConstant L = {});

struct HilbertSetBounds {
  double sharp;       // sqrt(2 sigma (r + d))
  double comparison;  // sqrt(4 sigma (2r + d) + sigma^2)
};

HilbertSetBounds hilbert_set_bounds(double sigma, double r, double d);

/// Hilbert-space instance check ||P1 x - P2 x|| <= sqrt(2 sigma (r + d));
/// the weaker comparison bound is recorded under "comparison". Requires p = 2.
BoundOutcome hilbert_f9_outcome(const SpaceSpec& space, const SetPair& pair,
                                const Point& x, const ProjectionResult& p1,
                                const ProjectionResult& p2);

/// ||P1 x - P2 y|| <= theorem-1 term on omega1 + theorem-2 term at y.
/// Needs P1 x, P1 y and P2 y.
BoundOutcome third_problem_outcome(const SpaceSpec& space, const SetPair& pair,
                                   const Point& x, const Point& y,
                                   const ProjectionResult& p1x,
                                   const ProjectionResult& p1y,
                                   const ProjectionResult& p2y,
                                   FigielConstant L = {});

}  // namespace banachproj
