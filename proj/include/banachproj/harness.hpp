#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "banachproj/bounds.hpp"

namespace banachproj {

enum class Suite {
  Lemma1,
  Lemma2,
  Figiel,
  Theorem1,
  Theorem2,
  Remark5,
  HilbertF9,
  ThirdProblem,
  SolverOracle,
  DualityIdentities,
};

const char* to_string(Suite suite);
/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(const std::string& name);
const std::vector<std::string>& suite_names();

struct SuiteConfig {
  Suite suite = Suite::Lemma1;
  std::vector<double> p{2.0};
  std::vector<std::size_t> dim{2};
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double perturbation_scale = 1e-3;

  // Tolerances and solver knobs.
  double comparison_tol = kComparisonTolerance;
  double solver_tol = 1e-10;
  std::size_t max_iter = 50000;
  double figiel_L = FigielConstant::kDefault;
  int oracle_grid = 200;
  double solver_failure_threshold = 0.01;

  /// Throws std::invalid_argument when trials = 0, some p <= 1, etc.
  void validate() const;
};

/// One (p, dim) cell of a suite run.
struct TrialGroup {
  double p;
  std::size_t dim;
};

std::vector<TrialGroup> trial_groups(const SuiteConfig& config);

/// Number of trials each group runs. Figiel is a fixed grid, not sampled.
std::size_t trials_per_group(const SuiteConfig& config);

/// A randomly generated test case; a deterministic function of
/// (seed, group, trial index).
struct Instance {
  SpaceSpec space;
  std::uint64_t stream_seed = 0;
  ConvexSet omega1;
  std::optional<ConvexSet> omega2;
  double sigma = 0.0;
  std::string pair_kind;  // "translate", "perturbed_polytope" or empty
  Point x;
  Point y;
};

std::uint64_t trial_stream_seed(std::uint64_t seed, std::size_t group,
                                std::size_t trial_index);

Instance generate_instance(const SuiteConfig& config, std::size_t group,
                           std::size_t trial_index);

enum class TrialStatus { Pass, Violation, SolverFailure };

const char* to_string(TrialStatus status);

struct TrialRecord {
  std::size_t trial = 0;
  std::size_t group = 0;
  double p = 0.0;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::string instance;  // short description of the sets involved
  BoundOutcome outcome;
  TrialStatus status = TrialStatus::Pass;
  std::string message;
  double wall_time = 0.0;  // seconds; excluded from determinism comparisons
};

struct GroupSummary {
  double p = 0.0;
  std::size_t dim = 0;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t informative = 0;
  std::size_t solver_failures = 0;
  std::optional<double> min_margin;

  double informative_fraction() const;
};

struct BoundReport {
  std::string suite;
  SuiteConfig config;
  std::size_t trials_run = 0;
  std::size_t violations = 0;
  std::size_t informative = 0;
  std::size_t solver_failures = 0;
  std::optional<double> worst_margin;
  std::optional<double> median_margin;
  double runtime_seconds = 0.0;
  std::vector<GroupSummary> groups;
  std::vector<TrialRecord> records;

  double informative_fraction() const;
  double solver_failure_rate() const;
  /// violations = 0 and solver-failure rate below the configured threshold.
  bool passed() const;
};

/// Runs one trial; exceptions from the numerics become violations.
TrialRecord run_trial(const SuiteConfig& config, std::size_t group,
                      std::size_t trial_index);

struct RunOptions {
  bool parallel = true;
  int threads = 0;            // 0: OpenMP default, capped by BANACHPROJ_THREADS
  bool keep_records = false;  // retain per-trial records in the report
};

/// Trials run under OpenMP; aggregation is over trial index order, so the
/// report does not depend on scheduling.
BoundReport run_suite(const SuiteConfig& config, const RunOptions& opts = {});

/// Single-threaded reference used to check the parallel path.
BoundReport run_suite_serial(const SuiteConfig& config, bool keep_records = false);

/// Thread count after applying the BANACHPROJ_THREADS cap.
int resolve_thread_count(int requested);

}  // namespace banachproj
