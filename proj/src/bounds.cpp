#include "banachproj/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace banachproj {

BoundOutcome BoundOutcome::make(double lhs, std::optional<double> rhs,
                                bool lower_bound) {
  BoundOutcome out;
  out.lhs = lhs;
  out.rhs = rhs;
  out.informative = rhs.has_value() && std::isfinite(*rhs);
  if (out.informative) out.margin = lower_bound ? lhs - *rhs : *rhs - lhs;
  return out;
}

double mean_square_constant(double a, double b) {
  return 2.0 * std::max(1.0, std::sqrt((a * a + b * b) / 2.0));
}

namespace {

void require_converged(const ProjectionResult& r, const char* what) {
  if (!r.converged)
    throw std::invalid_argument(std::string(what) + ": projection is not converged");
}

std::optional<double> scaled(double c, std::optional<double> v) {
  if (!v) return std::nullopt;
  return c * *v;
}

// C1 delta^{-1}(4 L (d + r) sigma) with C1 = 2 max{1, r + d}.
struct SetTerm {
  double r, d, C1;
  std::optional<double> value;
};

SetTerm set_perturbation_term(const SpaceSpec& space, const SetPair& pair,
                              const Point& at, FigielConstant L) {
  SetTerm t;
  t.r = norm(space, at);
  t.d = std::max(dist_to_origin(space, pair.omega1), dist_to_origin(space, pair.omega2));
  t.C1 = 2.0 * std::max(1.0, t.r + t.d);
  const double arg = 4.0 * L.value() * (t.d + t.r) * pair.sigma;
  t.value = scaled(t.C1, Modulus(space.p()).delta_inverse(arg));
  return t;
}

}  // namespace

BoundOutcome lemma1_outcome(const SpaceSpec& space, const Point& x,
                            const Point& y, FigielConstant L) {
  const Point diff = x - y;
  const double lhs = dual_pairing(duality_map(space, x) - duality_map(space, y), diff);
  const double C1 = mean_square_constant(norm(space, x), norm(space, y));
  const double arg = norm(space, diff) / C1;
  if (arg > 2.0)
    throw std::domain_error("lemma1_outcome: modulus argument exceeds 2");
  const double rhs = modulus_convexity(space.p(), arg) / (2.0 * L.value());
  BoundOutcome out = BoundOutcome::make(lhs, rhs, /*lower_bound=*/true);
  out.constants = {{"C1", C1}, {"L", L.value()}};
  return out;
}

BoundOutcome lemma2_outcome(const SpaceSpec& space, const Point& x,
                            const Point& y, FigielConstant L) {
  const double lhs = dual_norm(space, duality_map(space, x) - duality_map(space, y));
  // ||Jx|| = ||x||, so the primal and dual mean-square constants coincide.
  const double C = mean_square_constant(norm(space, x), norm(space, y));
  const double t = norm(space, x - y);
  const auto inv = Modulus(space.q()).g_inverse(2.0 * C * L.value() * t);
  BoundOutcome out = BoundOutcome::make(lhs, scaled(C, inv), false);
  out.constants = {{"C1", C}, {"C2", C}, {"L", L.value()}};
  return out;
}

std::optional<double> theorem1_rhs_split(const SpaceSpec& space, double C1,
                                         double C2, double t, FigielConstant L) {
  const double l = L.value();
  const auto inner = Modulus(space.q()).g_inverse(2.0 * C2 * l * t);
  if (!inner) return std::nullopt;
  const auto outer = Modulus(space.p()).g_inverse(2.0 * l * C1 * C2 * *inner);
  return scaled(C1, outer);
}

std::optional<double> theorem1_rhs(const SpaceSpec& space, double C, double t,
                                   FigielConstant L) {
  return theorem1_rhs_split(space, C, C, t, L);
}

BoundOutcome theorem1_outcome(const SpaceSpec& space, const ConvexSet& set,
                              const Point& x, const Point& y,
                              const ProjectionResult& px,
                              const ProjectionResult& py, FigielConstant L) {
  require_converged(px, "theorem1_outcome");
  require_converged(py, "theorem1_outcome");
  const Point& xb = px.point;
  const Point& yb = py.point;
  const double t = norm(space, x - y);
  const double x_to_yb = norm(space, x - yb);
  const double y_to_xb = norm(space, y - xb);
  const double C = 2.0 * std::max({1.0, x_to_yb, y_to_xb});
  const double C1 = mean_square_constant(norm(space, x - xb), x_to_yb);
  const double C2 = mean_square_constant(x_to_yb, norm(space, y - yb));

  BoundOutcome out = BoundOutcome::make(norm(space, xb - yb),
                                        theorem1_rhs(space, C, t, L), false);
  out.constants = {{"C", C}, {"C1", C1}, {"C2", C2}, {"L", L.value()}, {"t", t}};
  if (const auto split = theorem1_rhs_split(space, C1, C2, t, L))
    out.constants["rhs_proof_level"] = *split;
  if (membership(space, set, x, 1e-12) || membership(space, set, y, 1e-12))
    out.constants["C_endpoint_in_set"] = 2.0 * std::max(1.0, 2.0 * t);
  return out;
}

namespace {

struct RefinedTerm {
  double C1, C2;
  std::optional<double> value;
};

RefinedTerm refined_term(const SpaceSpec& space, const SetPair& pair,
                         const Point& x, const ProjectionResult& p1,
                         const ProjectionResult& p2, FigielConstant L) {
  const double a = norm(space, x - p1.point);
  const double b = norm(space, x - p2.point);
  RefinedTerm t;
  t.C1 = 2.0 * std::max({1.0, a, b});
  t.C2 = 2.0 * std::max(a, b);
  t.value = scaled(t.C1, Modulus(space.p()).delta_inverse(4.0 * L.value() * t.C2 * pair.sigma));
  return t;
}

}  // namespace

BoundOutcome theorem2_outcome(const SpaceSpec& space, const SetPair& pair,
                              const Point& x, const ProjectionResult& p1,
                              const ProjectionResult& p2, FigielConstant L) {
  require_converged(p1, "theorem2_outcome");
  require_converged(p2, "theorem2_outcome");
  const SetTerm term = set_perturbation_term(space, pair, x, L);
  const RefinedTerm refined = refined_term(space, pair, x, p1, p2, L);
  BoundOutcome out =
      BoundOutcome::make(norm(space, p1.point - p2.point), term.value, false);
  out.constants = {{"C1", term.C1}, {"r", term.r}, {"d", term.d},
                   {"sigma", pair.sigma}, {"L", L.value()},
                   {"C1_refined", refined.C1}, {"C2_refined", refined.C2}};
  if (refined.value) out.constants["rhs_refined"] = *refined.value;
  return out;
}

BoundOutcome remark5_outcome(const SpaceSpec& space, const SetPair& pair,
                             const Point& x, const ProjectionResult& p1,
                             const ProjectionResult& p2, FigielConstant L) {
  require_converged(p1, "remark5_outcome");
  require_converged(p2, "remark5_outcome");
  const SetTerm term = set_perturbation_term(space, pair, x, L);
  const RefinedTerm refined = refined_term(space, pair, x, p1, p2, L);
  BoundOutcome out =
      BoundOutcome::make(norm(space, p1.point - p2.point), refined.value, false);
  out.constants = {{"C1", refined.C1}, {"C2", refined.C2}, {"r", term.r},
                   {"d", term.d}, {"sigma", pair.sigma}, {"L", L.value()},
                   {"C1_theorem2", term.C1}};
  if (term.value) out.constants["rhs_theorem2"] = *term.value;
  return out;
}

HilbertSetBounds hilbert_set_bounds(double sigma, double r, double d) {
  if (sigma < 0.0 || r < 0.0 || d < 0.0)
    throw std::invalid_argument("hilbert_set_bounds: inputs must be nonnegative");
  return {std::sqrt(2.0 * sigma * (r + d)),
          std::sqrt(4.0 * sigma * (2.0 * r + d) + sigma * sigma)};
}

BoundOutcome hilbert_f9_outcome(const SpaceSpec& space, const SetPair& pair,
                                const Point& x, const ProjectionResult& p1,
                                const ProjectionResult& p2) {
  if (!space.hilbert())
    throw std::invalid_argument("hilbert_f9_outcome: requires p = 2");
  require_converged(p1, "hilbert_f9_outcome");
  require_converged(p2, "hilbert_f9_outcome");
  const double r = norm(space, x);
  const double d = std::max(dist_to_origin(space, pair.omega1),
                            dist_to_origin(space, pair.omega2));
  const HilbertSetBounds b = hilbert_set_bounds(pair.sigma, r, d);
  BoundOutcome out = BoundOutcome::make(norm(space, p1.point - p2.point), b.sharp, false);
  out.constants = {{"r", r}, {"d", d}, {"sigma", pair.sigma}, {"comparison", b.comparison}};
  return out;
}

BoundOutcome third_problem_outcome(const SpaceSpec& space, const SetPair& pair,
                                   const Point& x, const Point& y,
                                   const ProjectionResult& p1x,
                                   const ProjectionResult& p1y,
                                   const ProjectionResult& p2y,
                                   FigielConstant L) {
  require_converged(p1x, "third_problem_outcome");
  require_converged(p1y, "third_problem_outcome");
  require_converged(p2y, "third_problem_outcome");
  const BoundOutcome first = theorem1_outcome(space, pair.omega1, x, y, p1x, p1y, L);
  const SetTerm second = set_perturbation_term(space, pair, y, L);

  std::optional<double> rhs;
  if (first.rhs && second.value) rhs = *first.rhs + *second.value;
  BoundOutcome out =
      BoundOutcome::make(norm(space, p1x.point - p2y.point), rhs, false);
  out.constants = {{"C", first.constants.at("C")}, {"C1", second.C1},
                   {"r", second.r}, {"d", second.d}, {"sigma", pair.sigma},
                   {"L", L.value()}, {"t", first.constants.at("t")},
                   {"lhs_argument_part", first.lhs},
                   {"lhs_set_part", norm(space, p1y.point - p2y.point)}};
  if (first.rhs) out.constants["term_argument"] = *first.rhs;
  if (second.value) out.constants["term_set"] = *second.value;
  return out;
}

}  // namespace banachproj
