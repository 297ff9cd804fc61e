#include <algorithm>
#include <cmath>
#include <random>

#include "banachproj/harness.hpp"

namespace banachproj {

namespace {

const std::vector<std::pair<Suite, std::string>>& suite_table() {
  static const std::vector<std::pair<Suite, std::string>> table{
      {Suite::Lemma1, "lemma1"},
      {Suite::Lemma2, "lemma2"},
      {Suite::Figiel, "figiel"},
      {Suite::Theorem1, "theorem1"},
      {Suite::Theorem2, "theorem2"},
      {Suite::Remark5, "remark5"},
      {Suite::HilbertF9, "hilbert_f9"},
      {Suite::ThirdProblem, "third_problem"},
      {Suite::SolverOracle, "solver_oracle"},
      {Suite::DualityIdentities, "duality_identities"},
  };
  return table;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Coordinates and radii of generated sets keep every set inside the p-ball
// of radius 10 around the origin.
constexpr double kCenterNorm = 6.0;
constexpr double kSpread = 4.0;
constexpr double kPointRange = 5.0;

Point uniform_point(std::size_t n, double a, double b, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(a, b);
  Point x = Point::zeros(n);
  for (auto& c : x.coords) c = u(rng);
  return x;
}

Point capped(const SpaceSpec& space, Point v, double cap) {
  const double n = norm(space, v);
  if (n > cap) v = (cap / n) * v;
  return v;
}

/// Isotropic direction scaled to a p-norm in [0.5, 1.5] * scale.
Point perturbation(const SpaceSpec& space, double scale, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> rho(0.5, 1.5);
  Point u = Point::zeros(space.dim());
  double n = 0.0;
  while (n == 0.0) {
    for (auto& c : u.coords) c = gauss(rng);
    n = norm(space, u);
  }
  return (scale * rho(rng) / n) * u;
}

ConvexSet random_set(const SpaceSpec& space, SetKind kind, std::mt19937_64& rng) {
  const std::size_t n = space.dim();
  const Point c = capped(space, uniform_point(n, -kPointRange, kPointRange, rng), kCenterNorm);
  switch (kind) {
    case SetKind::Box: {
      Point h = capped(space, uniform_point(n, 0.2, 2.0, rng), kSpread);
      return ConvexSet::box(c - h, c + h);
    }
    case SetKind::Ball: {
      std::uniform_real_distribution<double> radius(0.5, kSpread);
      return ConvexSet::ball(c, radius(rng));
    }
    default: {
      std::uniform_int_distribution<std::size_t> extra(0, 9);
      const std::size_t m = n + 1 + extra(rng);
      std::vector<Point> verts;
      verts.reserve(m);
      for (std::size_t j = 0; j < m; ++j)
        verts.push_back(c + capped(space, uniform_point(n, -2.0, 2.0, rng), kSpread));
      return ConvexSet::polytope(std::move(verts));
    }
  }
}

bool uses_sets(Suite s) {
  return s == Suite::Theorem1 || s == Suite::Theorem2 || s == Suite::Remark5 ||
         s == Suite::HilbertF9 || s == Suite::ThirdProblem || s == Suite::SolverOracle;
}

bool uses_pairs(Suite s) {
  return s == Suite::Theorem2 || s == Suite::Remark5 || s == Suite::HilbertF9 ||
         s == Suite::ThirdProblem;
}

}  // namespace

const char* to_string(Suite suite) {
  for (const auto& [s, name] : suite_table())
    if (s == suite) return name.c_str();
  return "unknown";
}

Suite parse_suite(const std::string& name) {
  for (const auto& [s, n] : suite_table())
    if (n == name) return s;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : suite_table()) out.push_back(entry.second);
    return out;
  }();
  return names;
}

void SuiteConfig::validate() const {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (p.empty()) throw std::invalid_argument("at least one p is required");
  if (dim.empty()) throw std::invalid_argument("at least one dim is required");
  for (double v : p) SpaceSpec(1, v);
  for (std::size_t d : dim)
    if (d == 0) throw std::invalid_argument("dim must be positive");
  if (!(perturbation_scale > 0.0))
    throw std::invalid_argument("perturbation_scale must be positive");
  if (!(comparison_tol >= 0.0)) throw std::invalid_argument("comparison_tol must be >= 0");
  if (!(solver_tol > 0.0)) throw std::invalid_argument("solver_tol must be positive");
  if (max_iter == 0) throw std::invalid_argument("max_iter must be >= 1");
  FigielConstant{figiel_L};
  if (oracle_grid < 1) throw std::invalid_argument("oracle_grid must be >= 1");
  if (suite == Suite::SolverOracle)
    for (std::size_t d : dim)
      if (d > kMaxBruteForceDim)
        throw std::invalid_argument("solver_oracle supports dim <= 3");
  if (suite == Suite::HilbertF9)
    for (double v : p)
      if (v != 2.0) throw std::invalid_argument("hilbert_f9 requires p = 2");
}

std::vector<TrialGroup> trial_groups(const SuiteConfig& config) {
  std::vector<TrialGroup> out;
  if (config.suite == Suite::Figiel) {
    // the grid does not depend on the dimension
    for (double p : config.p) out.push_back({p, 1});
    return out;
  }
  for (double p : config.p)
    for (std::size_t d : config.dim) out.push_back({p, d});
  return out;
}

std::size_t trials_per_group(const SuiteConfig& config) {
  if (config.suite == Suite::Figiel) {
    // eps <= eta over {0.05 k : k = 1..40}, for the exponent and its dual
    constexpr std::size_t k = 40;
    return 2 * k * (k + 1) / 2;
  }
  return config.trials;
}

std::uint64_t trial_stream_seed(std::uint64_t seed, std::size_t group,
                                std::size_t trial_index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(0x51ed27a1ULL + group) ^
                    splitmix64(0x7f4a7c15ULL * (trial_index + 1)));
}

Instance generate_instance(const SuiteConfig& config, std::size_t group,
                           std::size_t trial_index) {
  const std::vector<TrialGroup> groups = trial_groups(config);
  if (group >= groups.size()) throw std::out_of_range("generate_instance: group index");
  const SpaceSpec space(groups[group].dim, groups[group].p);
  const std::uint64_t stream = trial_stream_seed(config.seed, group, trial_index);
  std::mt19937_64 rng(stream);
  const std::size_t n = space.dim();

  SetKind kind = SetKind::VPolytope;
  if (config.suite == Suite::SolverOracle)
    kind = trial_index % 2 == 0 ? SetKind::Box : SetKind::VPolytope;
  else if (uses_pairs(config.suite))
    // odd trials: perturbed polytopes; even trials: translates of every kind
    kind = trial_index % 2 == 1 ? SetKind::VPolytope
                                : static_cast<SetKind>((trial_index / 2) % 3);
  else if (uses_sets(config.suite))
    kind = static_cast<SetKind>(trial_index % 3);

  ConvexSet omega1 = uses_sets(config.suite) ? random_set(space, kind, rng)
                                             : ConvexSet::box(Point::zeros(n), Point::zeros(n));
  Point x = uniform_point(n, -kPointRange, kPointRange, rng);
  if (config.suite == Suite::DualityIdentities && trial_index == 0) x = Point::zeros(n);
  Point y = x + perturbation(space, config.perturbation_scale, rng);

  Instance inst{space, stream, omega1, std::nullopt, 0.0, "", std::move(x), std::move(y)};
  if (!uses_pairs(config.suite)) return inst;

  if (trial_index % 2 == 0) {
    const Point t = perturbation(space, config.perturbation_scale, rng);
    inst.omega2 = translate(omega1, t);
    inst.sigma = norm(space, t);
    inst.pair_kind = "translate";
  } else {
    std::vector<Point> verts = omega1.as_polytope()->vertices;
    double worst_shift = 0.0;
    for (auto& v : verts) {
      const Point e = perturbation(space, config.perturbation_scale, rng);
      worst_shift = std::max(worst_shift, norm(space, e));
      v = v + e;
    }
    inst.omega2 = ConvexSet::polytope(std::move(verts));
    // Moving each vertex by at most s moves the hull by at most s.
    const HausdorffDistance h =
        hausdorff_distance(space, omega1, *inst.omega2, config.solver_tol);
    inst.sigma = std::min(h.upper, worst_shift);
    inst.pair_kind = "perturbed_polytope";
  }
  return inst;
}

}  // namespace banachproj
