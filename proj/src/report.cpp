#include "banachproj/report.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <set>

namespace banachproj {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::optional<double> read_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

json to_json(const SuiteConfig& c) {
  return json{{"suite", to_string(c.suite)},
              {"p", c.p},
              {"dim", c.dim},
              {"trials", c.trials},
              {"seed", c.seed},
              {"perturbation_scale", c.perturbation_scale},
              {"comparison_tol", c.comparison_tol},
              {"solver_tol", c.solver_tol},
              {"max_iter", c.max_iter},
              {"L", c.figiel_L},
              {"oracle_grid", c.oracle_grid},
              {"solver_failure_threshold", c.solver_failure_threshold}};
}

SuiteConfig config_from_json(const json& j, SuiteConfig c) {
  static const std::set<std::string> known{
      "suite", "p", "dim", "trials", "seed", "perturbation_scale", "comparison_tol",
      "solver_tol", "max_iter", "L", "oracle_grid", "solver_failure_threshold"};
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  for (const auto& item : j.items())
    if (!known.count(item.key()))
      throw std::invalid_argument("config: unknown key '" + item.key() + "'");
  try {
    if (j.contains("suite")) c.suite = parse_suite(j.at("suite").get<std::string>());
    if (j.contains("p")) {
      const json& p = j.at("p");
      c.p = p.is_array() ? p.get<std::vector<double>>() : std::vector<double>{p.get<double>()};
    }
    if (j.contains("dim")) {
      const json& d = j.at("dim");
      c.dim = d.is_array() ? d.get<std::vector<std::size_t>>()
                           : std::vector<std::size_t>{d.get<std::size_t>()};
    }
    if (j.contains("trials")) c.trials = j.at("trials").get<std::size_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("perturbation_scale"))
      c.perturbation_scale = j.at("perturbation_scale").get<double>();
    if (j.contains("comparison_tol")) c.comparison_tol = j.at("comparison_tol").get<double>();
    if (j.contains("solver_tol")) c.solver_tol = j.at("solver_tol").get<double>();
    if (j.contains("max_iter")) c.max_iter = j.at("max_iter").get<std::size_t>();
    if (j.contains("L")) c.figiel_L = j.at("L").get<double>();
    if (j.contains("oracle_grid")) c.oracle_grid = j.at("oracle_grid").get<int>();
    if (j.contains("solver_failure_threshold"))
      c.solver_failure_threshold = j.at("solver_failure_threshold").get<double>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return c;
}

json to_json(const BoundOutcome& o) {
  json j{{"lhs", o.lhs},
         {"rhs", optional_number(o.rhs)},
         {"informative", o.informative},
         {"constants", o.constants}};
  if (o.margin) j["margin"] = optional_number(o.margin);
  return j;
}

BoundOutcome outcome_from_json(const json& j) {
  BoundOutcome o;
  o.lhs = j.at("lhs").get<double>();
  o.rhs = read_optional(j, "rhs");
  o.informative = j.at("informative").get<bool>();
  o.margin = read_optional(j, "margin");
  o.constants = j.at("constants").get<std::map<std::string, double>>();
  return o;
}

json to_json(const BoundReport& r, bool include_timing) {
  json groups = json::array();
  for (const GroupSummary& g : r.groups) {
    groups.push_back({{"p", g.p},
                      {"dim", g.dim},
                      {"trials", g.trials},
                      {"violations", g.violations},
                      {"informative", g.informative},
                      {"informative_fraction", g.informative_fraction()},
                      {"solver_failures", g.solver_failures},
                      {"min_margin", optional_number(g.min_margin)}});
  }
  json j{{"suite", r.suite},
         {"config", to_json(r.config)},
         {"trials_run", r.trials_run},
         {"violations", r.violations},
         {"informative", r.informative},
         {"informative_fraction", r.informative_fraction()},
         {"solver_failures", r.solver_failures},
         {"solver_failure_rate", r.solver_failure_rate()},
         {"worst_margin", optional_number(r.worst_margin)},
         {"median_margin", optional_number(r.median_margin)},
         {"passed", r.passed()},
         {"groups", groups}};
  if (include_timing) j["runtime_seconds"] = r.runtime_seconds;
  if (!r.records.empty()) {
    json recs = json::array();
    for (const TrialRecord& t : r.records) {
      json rec{{"trial", t.trial},
               {"group", t.group},
               {"p", t.p},
               {"dim", t.dim},
               {"seed", t.seed},
               {"instance", t.instance},
               {"status", to_string(t.status)},
               {"outcome", to_json(t.outcome)}};
      if (!t.message.empty()) rec["message"] = t.message;
      if (include_timing) rec["wall_time"] = t.wall_time;
      recs.push_back(std::move(rec));
    }
    j["records"] = std::move(recs);
  }
  return j;
}

BoundReport report_from_json(const json& j) {
  BoundReport r;
  r.suite = j.at("suite").get<std::string>();
  r.config = config_from_json(j.at("config"));
  r.trials_run = j.at("trials_run").get<std::size_t>();
  r.violations = j.at("violations").get<std::size_t>();
  r.informative = j.at("informative").get<std::size_t>();
  r.solver_failures = j.at("solver_failures").get<std::size_t>();
  r.worst_margin = read_optional(j, "worst_margin");
  r.median_margin = read_optional(j, "median_margin");
  r.runtime_seconds = j.value("runtime_seconds", 0.0);
  for (const json& g : j.at("groups")) {
    GroupSummary s;
    s.p = g.at("p").get<double>();
    s.dim = g.at("dim").get<std::size_t>();
    s.trials = g.at("trials").get<std::size_t>();
    s.violations = g.at("violations").get<std::size_t>();
    s.informative = g.at("informative").get<std::size_t>();
    s.solver_failures = g.at("solver_failures").get<std::size_t>();
    s.min_margin = read_optional(g, "min_margin");
    r.groups.push_back(s);
  }
  if (j.contains("records")) {
    for (const json& t : j.at("records")) {
      TrialRecord rec;
      rec.trial = t.at("trial").get<std::size_t>();
      rec.group = t.at("group").get<std::size_t>();
      rec.p = t.at("p").get<double>();
      rec.dim = t.at("dim").get<std::size_t>();
      rec.seed = t.at("seed").get<std::uint64_t>();
      rec.instance = t.at("instance").get<std::string>();
      const std::string status = t.at("status").get<std::string>();
      rec.status = status == "pass"        ? TrialStatus::Pass
                   : status == "violation" ? TrialStatus::Violation
                                           : TrialStatus::SolverFailure;
      rec.outcome = outcome_from_json(t.at("outcome"));
      rec.message = t.value("message", std::string());
      rec.wall_time = t.value("wall_time", 0.0);
      r.records.push_back(std::move(rec));
    }
  }
  return r;
}

void write_csv(std::ostream& out, const BoundReport& report) {
  std::set<std::string> names;
  for (const TrialRecord& t : report.records)
    for (const auto& kv : t.outcome.constants) names.insert(kv.first);
  out << "trial,group,p,dim,status,lhs,rhs,margin,informative";
  for (const auto& n : names) out << ',' << n;
  out << '\n';
  out << std::setprecision(17);
  for (const TrialRecord& t : report.records) {
    out << t.trial << ',' << t.group << ',' << t.p << ',' << t.dim << ','
        << to_string(t.status) << ',' << t.outcome.lhs << ',';
    if (t.outcome.rhs) out << *t.outcome.rhs;
    out << ',';
    if (t.outcome.margin) out << *t.outcome.margin;
    out << ',' << (t.outcome.informative ? 1 : 0);
    for (const auto& n : names) {
      out << ',';
      const auto it = t.outcome.constants.find(n);
      if (it != t.outcome.constants.end()) out << it->second;
    }
    out << '\n';
  }
}

}  // namespace banachproj
