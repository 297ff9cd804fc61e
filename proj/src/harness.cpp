#include "banachproj/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace banachproj {

const char* to_string(TrialStatus status) {
  switch (status) {
    case TrialStatus::Pass: return "pass";
    case TrialStatus::Violation: return "violation";
    case TrialStatus::SolverFailure: return "solver_failure";
  }
  return "unknown";
}

double GroupSummary::informative_fraction() const {
  const std::size_t judged = trials - solver_failures;
  return judged == 0 ? 0.0 : static_cast<double>(informative) / static_cast<double>(judged);
}

double BoundReport::informative_fraction() const {
  const std::size_t judged = trials_run - solver_failures;
  return judged == 0 ? 0.0 : static_cast<double>(informative) / static_cast<double>(judged);
}

double BoundReport::solver_failure_rate() const {
  return trials_run == 0 ? 0.0
                         : static_cast<double>(solver_failures) / static_cast<double>(trials_run);
}

bool BoundReport::passed() const {
  return violations == 0 && solver_failure_rate() < config.solver_failure_threshold;
}

namespace {

struct SolverFailure {};

ProjectionResult project_with_retry(const SpaceSpec& space, const ConvexSet& set,
                                    const Point& x, const SuiteConfig& config) {
  ProjectOptions opts;
  opts.tol = config.solver_tol;
  opts.max_iter = config.max_iter;
  ProjectionResult r = project(space, set, x, opts);
  if (r.converged) return r;
  opts.max_iter *= 4;
  r = project(space, set, x, opts);
  if (!r.converged) throw SolverFailure{};
  return r;
}

// Margins that must be nonnegative with no slack.
bool exact_threshold_suite(Suite s) {
  return s == Suite::Figiel || s == Suite::SolverOracle || s == Suite::DualityIdentities;
}

BoundOutcome figiel_trial(double p, std::size_t index, FigielConstant L,
                          std::string& label) {
  constexpr std::size_t k = 40;
  constexpr std::size_t per_exponent = k * (k + 1) / 2;
  const double r = index < per_exponent ? p : conjugate_exponent(p);
  std::size_t rem = index % per_exponent;
  std::size_t i = 1;
  while (rem >= k - i + 1) {
    rem -= k - i + 1;
    ++i;
  }
  const std::size_t j = i + rem;
  const double eps = 0.05 * static_cast<double>(i);
  const double eta = 0.05 * static_cast<double>(j);
  const double lhs = eps * eps * modulus_convexity(r, eta);
  const double rhs = eta * eta * modulus_convexity(r, eps) / (4.0 * L.value());
  BoundOutcome out = BoundOutcome::make(lhs, rhs, /*lower_bound=*/true);
  out.margin = figiel_check(r, eps, eta, L);
  out.constants = {{"exponent", r}, {"eps", eps}, {"eta", eta}, {"L", L.value()}};
  label = index < per_exponent ? "primal" : "dual";
  return out;
}

BoundOutcome duality_trial(const Instance& inst) {
  const SpaceSpec& space = inst.space;
  const Point& x = inst.x;
  const DualVector jx = duality_map(space, x);
  const double nx = norm(space, x);
  const double pair_err = std::abs(dual_pairing(jx, x) - nx * nx) / (1.0 + nx * nx);
  const double norm_err = std::abs(dual_norm(space, jx) - nx) / (1.0 + nx);
  double err = std::max(pair_err, norm_err);
  if (space.hilbert() && jx.coords != x.coords) err = std::numeric_limits<double>::infinity();
  const double mono =
      dual_pairing(jx - duality_map(space, inst.y), inst.x - inst.y);
  constexpr double kIdentityTol = 1e-10;
  BoundOutcome out = BoundOutcome::make(err, kIdentityTol, false);
  if (mono < -1e-12) out.margin = std::min(*out.margin, mono);
  out.constants = {{"pairing_error", pair_err}, {"norm_error", norm_err},
                   {"monotonicity", mono}};
  return out;
}

BoundOutcome oracle_trial(const Instance& inst, const SuiteConfig& config) {
  const SpaceSpec& space = inst.space;
  const ProjectionResult pr = project_with_retry(space, inst.omega1, inst.x, config);
  const BruteForceResult bf = brute_force_project(space, inst.omega1, inst.x, config.oracle_grid);
  const double diff = norm(space, pr.point - bf.point);
  const double threshold = 2.0 * bf.resolution;
  const ProjectionResult again = project_with_retry(space, inst.omega1, pr.point, config);
  const double idem = norm(space, again.point - pr.point);

  constexpr double kResidualTol = 1e-8;
  constexpr double kIdempotenceTol = 1e-9;
  BoundOutcome out = BoundOutcome::make(diff, threshold, false);
  out.margin = std::min({*out.margin, kResidualTol - pr.vi_residual, kIdempotenceTol - idem});
  out.constants = {{"resolution", bf.resolution}, {"vi_residual", pr.vi_residual},
                   {"idempotence", idem}, {"iterations", static_cast<double>(pr.iterations)}};
  return out;
}

}  // namespace

TrialRecord run_trial(const SuiteConfig& config, std::size_t group,
                      std::size_t trial_index) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<TrialGroup> groups = trial_groups(config);
  TrialRecord rec;
  rec.trial = trial_index;
  rec.group = group;
  rec.p = groups.at(group).p;
  rec.dim = groups.at(group).dim;
  rec.seed = trial_stream_seed(config.seed, group, trial_index);
  const FigielConstant L(config.figiel_L);

  try {
    if (config.suite == Suite::Figiel) {
      rec.outcome = figiel_trial(rec.p, trial_index, L, rec.instance);
    } else {
      const Instance inst = generate_instance(config, group, trial_index);
      const SpaceSpec& space = inst.space;
      rec.instance = to_string(inst.omega1.kind());
      if (!inst.pair_kind.empty()) rec.instance += "/" + inst.pair_kind;
      switch (config.suite) {
        case Suite::DualityIdentities:
          rec.instance = "point";
          rec.outcome = duality_trial(inst);
          break;
        case Suite::Lemma1:
          rec.instance = "point_pair";
          rec.outcome = lemma1_outcome(space, inst.x, inst.y, L);
          break;
        case Suite::Lemma2:
          rec.instance = "point_pair";
          rec.outcome = lemma2_outcome(space, inst.x, inst.y, L);
          break;
        case Suite::Theorem1: {
          const auto px = project_with_retry(space, inst.omega1, inst.x, config);
          const auto py = project_with_retry(space, inst.omega1, inst.y, config);
          rec.outcome = theorem1_outcome(space, inst.omega1, inst.x, inst.y, px, py, L);
          break;
        }
        case Suite::Theorem2:
        case Suite::Remark5:
        case Suite::HilbertF9: {
          const SetPair pair{inst.omega1, *inst.omega2, inst.sigma};
          const auto p1 = project_with_retry(space, pair.omega1, inst.x, config);
          const auto p2 = project_with_retry(space, pair.omega2, inst.x, config);
          if (config.suite == Suite::Theorem2)
            rec.outcome = theorem2_outcome(space, pair, inst.x, p1, p2, L);
          else if (config.suite == Suite::Remark5)
            rec.outcome = remark5_outcome(space, pair, inst.x, p1, p2, L);
          else
            rec.outcome = hilbert_f9_outcome(space, pair, inst.x, p1, p2);
          break;
        }
        case Suite::ThirdProblem: {
          const SetPair pair{inst.omega1, *inst.omega2, inst.sigma};
          const auto p1x = project_with_retry(space, pair.omega1, inst.x, config);
          const auto p1y = project_with_retry(space, pair.omega1, inst.y, config);
          const auto p2y = project_with_retry(space, pair.omega2, inst.y, config);
          rec.outcome = third_problem_outcome(space, pair, inst.x, inst.y, p1x, p1y, p2y, L);
          break;
        }
        case Suite::SolverOracle:
          rec.outcome = oracle_trial(inst, config);
          break;
        case Suite::Figiel:
          break;
      }
    }
    const double slack = exact_threshold_suite(config.suite) ? 0.0 : config.comparison_tol;
    if (rec.outcome.margin && !(*rec.outcome.margin >= -slack))
      rec.status = TrialStatus::Violation;
  } catch (const SolverFailure&) {
    rec.status = TrialStatus::SolverFailure;
    rec.message = "projection did not converge after retry";
  } catch (const std::exception& e) {
    rec.status = TrialStatus::Violation;
    rec.message = e.what();
  }
  rec.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

namespace {

BoundReport aggregate(const SuiteConfig& config, std::vector<TrialRecord> records,
                      bool keep_records) {
  BoundReport rep;
  rep.suite = to_string(config.suite);
  rep.config = config;
  const std::vector<TrialGroup> groups = trial_groups(config);
  rep.groups.resize(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    rep.groups[g].p = groups[g].p;
    rep.groups[g].dim = groups[g].dim;
  }
  std::vector<double> margins;
  for (const TrialRecord& rec : records) {
    GroupSummary& gs = rep.groups[rec.group];
    ++rep.trials_run;
    ++gs.trials;
    if (rec.status == TrialStatus::SolverFailure) {
      ++rep.solver_failures;
      ++gs.solver_failures;
      continue;
    }
    if (rec.status == TrialStatus::Violation) {
      ++rep.violations;
      ++gs.violations;
    }
    if (rec.outcome.informative) {
      ++rep.informative;
      ++gs.informative;
    }
    if (rec.outcome.margin) {
      const double m = *rec.outcome.margin;
      margins.push_back(m);
      if (!gs.min_margin || m < *gs.min_margin) gs.min_margin = m;
    }
  }
  if (!margins.empty()) {
    rep.worst_margin = *std::min_element(margins.begin(), margins.end());
    const std::size_t mid = margins.size() / 2;
    std::nth_element(margins.begin(), margins.begin() + static_cast<std::ptrdiff_t>(mid),
                     margins.end());
    rep.median_margin = margins[mid];
  }
  if (keep_records) rep.records = std::move(records);
  return rep;
}

}  // namespace

int resolve_thread_count(int requested) {
  int n = requested > 0 ? requested : omp_get_max_threads();
  if (const char* cap = std::getenv("BANACHPROJ_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && v > 0) n = std::min<int>(n, static_cast<int>(v));
  }
  return std::max(1, n);
}

BoundReport run_suite(const SuiteConfig& config, const RunOptions& opts) {
  if (!opts.parallel) return run_suite_serial(config, opts.keep_records);
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t groups = trial_groups(config).size();
  const std::size_t per = trials_per_group(config);
  const auto total = static_cast<long long>(groups * per);
  std::vector<TrialRecord> records(static_cast<std::size_t>(total));
  const int threads = resolve_thread_count(opts.threads);

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (long long i = 0; i < total; ++i) {
    const auto k = static_cast<std::size_t>(i);
    records[k] = run_trial(config, k / per, k % per);
  }

  BoundReport rep = aggregate(config, std::move(records), opts.keep_records);
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

BoundReport run_suite_serial(const SuiteConfig& config, bool keep_records) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t groups = trial_groups(config).size();
  const std::size_t per = trials_per_group(config);
  std::vector<TrialRecord> records;
  records.reserve(groups * per);
  for (std::size_t g = 0; g < groups; ++g)
    for (std::size_t t = 0; t < per; ++t) records.push_back(run_trial(config, g, t));
  BoundReport rep = aggregate(config, std::move(records), keep_records);
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace banachproj
