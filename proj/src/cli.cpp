#include "banachproj/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>

#include "banachproj/report.hpp"
#include "banachproj/set_io.hpp"

namespace banachproj {

using nlohmann::json;

namespace {

struct ProjectArgs {
  double p = 2.0;
  std::size_t dim = 0;
  std::vector<double> point;
  std::string set_path;
  double tol = 1e-10;
  std::size_t max_iter = 50000;
};

struct HausdorffArgs {
  double p = 2.0;
  std::size_t dim = 0;
  std::string set1;
  std::string set2;
  double tol = 1e-10;
};

struct VerifyArgs {
  std::string suite;
  std::vector<double> p;
  std::vector<std::size_t> dim;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double scale = 0.0;
  double comparison_tol = 0.0;
  double solver_tol = 0.0;
  std::size_t max_iter = 0;
  double L = 0.0;
  int oracle_grid = 0;
  double failure_threshold = 0.0;
  std::string config_path;
  std::string out_path;
  std::string csv_path;
  int threads = 0;
  bool records = false;
  bool serial = false;
};

struct ModuliArgs {
  double p = 2.0;
  std::size_t points = 40;
  bool empirical = false;
  std::size_t samples = 2000;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SpaceSpec resolve_space(double p, std::size_t dim_flag, std::size_t dim_data) {
  if (dim_flag != 0 && dim_flag != dim_data)
    throw DimensionMismatch("dimension mismatch: --dim " + std::to_string(dim_flag) +
                            " but data has dimension " + std::to_string(dim_data));
  return SpaceSpec(dim_data, p);
}

int cmd_project(const ProjectArgs& a, std::ostream& out) {
  const ConvexSet set = read_set_file(a.set_path);
  const Point x{a.point};
  const SpaceSpec space = resolve_space(a.p, a.dim, x.coords.size());
  require_dim(space, set.dim(), "set");
  ProjectOptions opts;
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  const ProjectionResult r = project(space, set, x, opts);
  json j{{"config",
          {{"command", "project"},
           {"p", a.p},
           {"dim", space.dim()},
           {"point", a.point},
           {"set", to_json(set)},
           {"tol", a.tol},
           {"max_iter", a.max_iter}}},
         {"point", r.point.coords},
         {"distance", r.distance},
         {"vi_residual", r.vi_residual},
         {"iterations", r.iterations},
         {"converged", r.converged}};
  out << j.dump(2) << '\n';
  return r.converged ? kExitOk : kExitNotConverged;
}

int cmd_hausdorff(const HausdorffArgs& a, std::ostream& out) {
  const ConvexSet s1 = read_set_file(a.set1);
  const ConvexSet s2 = read_set_file(a.set2);
  const SpaceSpec space = resolve_space(a.p, a.dim, s1.dim());
  require_dim(space, s2.dim(), "set2");
  const HausdorffDistance h = hausdorff_distance(space, s1, s2, a.tol);
  json j{{"config",
          {{"command", "hausdorff"},
           {"p", a.p},
           {"dim", space.dim()},
           {"set1", to_json(s1)},
           {"set2", to_json(s2)},
           {"tol", a.tol}}},
         {"lower", h.lower},
         {"upper", h.upper},
         {"method", h.method}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

SuiteConfig resolve_verify_config(const VerifyArgs& a, const CLI::App& cmd) {
  SuiteConfig c;
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    if (!in) throw UsageError("cannot open config file '" + a.config_path + "'");
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw UsageError("config file '" + a.config_path + "' is not valid JSON: " + e.what());
    }
    c = config_from_json(j, c);
  }
  auto given = [&](const char* name) { return cmd.count(name) > 0; };
  if (given("--suite")) c.suite = parse_suite(a.suite);
  else if (a.config_path.empty()) throw UsageError("verify: --suite is required");
  if (given("--p")) c.p = a.p;
  if (given("--dim")) c.dim = a.dim;
  if (given("--trials")) c.trials = a.trials;
  if (given("--seed")) c.seed = a.seed;
  if (given("--scale")) c.perturbation_scale = a.scale;
  if (given("--comparison-tol")) c.comparison_tol = a.comparison_tol;
  if (given("--solver-tol")) c.solver_tol = a.solver_tol;
  if (given("--max-iter")) c.max_iter = a.max_iter;
  if (given("--L")) c.figiel_L = a.L;
  if (given("--oracle-grid")) c.oracle_grid = a.oracle_grid;
  if (given("--failure-threshold")) c.solver_failure_threshold = a.failure_threshold;
  c.validate();
  return c;
}

int cmd_verify(const VerifyArgs& a, const CLI::App& cmd, std::ostream& out,
               std::ostream& err) {
  const SuiteConfig config = resolve_verify_config(a, cmd);
  const bool keep = a.records || !a.csv_path.empty();
  RunOptions opts;
  opts.threads = a.threads;
  opts.keep_records = keep;
  const BoundReport report =
      a.serial ? run_suite_serial(config, keep) : run_suite(config, opts);

  json full = to_json(report);
  if (!a.out_path.empty()) {
    std::ofstream f(a.out_path);
    if (!f) throw std::runtime_error("cannot write report to '" + a.out_path + "'");
    f << full.dump(2) << '\n';
    if (!f) throw std::runtime_error("failed writing report to '" + a.out_path + "'");
  }
  if (!a.csv_path.empty()) {
    std::ofstream f(a.csv_path);
    if (!f) throw std::runtime_error("cannot write CSV to '" + a.csv_path + "'");
    write_csv(f, report);
  }
  if (!a.records) full.erase("records");
  out << full.dump(2) << '\n';

  if (report.violations > 0) {
    err << "verify: " << report.violations << " violation(s)\n";
    return kExitViolation;
  }
  if (!report.passed()) {
    err << "verify: solver-failure rate " << report.solver_failure_rate()
        << " is at or above the threshold\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

int cmd_moduli(const ModuliArgs& a, std::ostream& out) {
  const SpaceSpec space(a.dim, a.p);
  if (a.points == 0) throw UsageError("moduli: --points must be >= 1");
  json config{{"command", "moduli"}, {"p", a.p}, {"points", a.points},
              {"empirical", a.empirical}};
  if (a.empirical) {
    config["samples"] = a.samples;
    config["dim"] = a.dim;
    config["seed"] = a.seed;
  }
  out << "# " << config.dump() << '\n';
  out << (a.empirical ? "eps,delta,g,empirical\n" : "eps,delta,g\n");
  out << std::setprecision(17);
  for (std::size_t k = 1; k <= a.points; ++k) {
    const double eps = 2.0 * static_cast<double>(k) / static_cast<double>(a.points);
    out << eps << ',' << modulus_convexity(a.p, eps) << ',' << g_fn(a.p, eps);
    if (a.empirical)
      out << ',' << estimate_modulus_empirical(space, eps, a.samples, a.seed + k);
    out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric projections and bound verification in l_p spaces", "banachproj"};
  app.require_subcommand(1);

  ProjectArgs pa;
  CLI::App* project_cmd = app.add_subcommand("project", "Project a point onto a convex set");
  project_cmd->add_option("--p", pa.p, "Exponent p > 1")->required();
  project_cmd->add_option("--dim", pa.dim, "Dimension (checked against the point)");
  project_cmd->add_option("--point", pa.point, "Coordinates, comma separated")
      ->required()
      ->delimiter(',');
  project_cmd->add_option("--set", pa.set_path, "Set description (JSON file)")->required();
  project_cmd->add_option("--tol", pa.tol, "Residual tolerance");
  project_cmd->add_option("--max-iter", pa.max_iter, "Iteration cap");

  HausdorffArgs ha;
  CLI::App* hausdorff_cmd =
      app.add_subcommand("hausdorff", "Hausdorff distance between two sets");
  hausdorff_cmd->add_option("--p", ha.p, "Exponent p > 1")->required();
  hausdorff_cmd->add_option("--dim", ha.dim, "Dimension (checked against the sets)");
  hausdorff_cmd->add_option("--set1", ha.set1, "First set (JSON file)")->required();
  hausdorff_cmd->add_option("--set2", ha.set2, "Second set (JSON file)")->required();
  hausdorff_cmd->add_option("--tol", ha.tol, "Projection tolerance");

  VerifyArgs va;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a bound-verification suite");
  verify_cmd->add_option("--suite", va.suite, "Suite name");
  verify_cmd->add_option("--p", va.p, "Exponents, comma separated")->delimiter(',');
  verify_cmd->add_option("--dim", va.dim, "Dimensions, comma separated")->delimiter(',');
  verify_cmd->add_option("--trials", va.trials, "Trials per (p, dim)");
  verify_cmd->add_option("--seed", va.seed, "Base seed");
  verify_cmd->add_option("--scale", va.scale, "Perturbation scale");
  verify_cmd->add_option("--comparison-tol", va.comparison_tol, "Margin tolerance");
  verify_cmd->add_option("--solver-tol", va.solver_tol, "Projection tolerance");
  verify_cmd->add_option("--max-iter", va.max_iter, "Projection iteration cap");
  verify_cmd->add_option("--L", va.L, "Figiel constant");
  verify_cmd->add_option("--oracle-grid", va.oracle_grid, "Brute-force grid size");
  verify_cmd->add_option("--failure-threshold", va.failure_threshold,
                         "Allowed solver-failure rate");
  verify_cmd->add_option("--config", va.config_path, "JSON config; flags override it");
  verify_cmd->add_option("--out", va.out_path, "Report path (JSON)");
  verify_cmd->add_option("--csv", va.csv_path, "Per-trial CSV path");
  verify_cmd->add_option("--threads", va.threads, "Thread count (0: default)");
  verify_cmd->add_flag("--records", va.records, "Include per-trial records in the report");
  verify_cmd->add_flag("--serial", va.serial, "Use the single-threaded runner");

  ModuliArgs ma;
  CLI::App* moduli_cmd = app.add_subcommand("moduli", "Tabulate delta and g");
  moduli_cmd->add_option("--p", ma.p, "Exponent p > 1")->required();
  moduli_cmd->add_option("--points", ma.points, "Grid points on (0, 2]");
  moduli_cmd->add_flag("--empirical", ma.empirical, "Add a sampled modulus column");
  moduli_cmd->add_option("--samples", ma.samples, "Samples per empirical estimate");
  moduli_cmd->add_option("--dim", ma.dim, "Dimension for the empirical estimate");
  moduli_cmd->add_option("--seed", ma.seed, "Seed for the empirical estimate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*project_cmd) return cmd_project(pa, out);
    if (*hausdorff_cmd) return cmd_hausdorff(ha, out);
    if (*verify_cmd) return cmd_verify(va, *verify_cmd, out, err);
    if (*moduli_cmd) return cmd_moduli(ma, out);
  } catch (const SetFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace banachproj
