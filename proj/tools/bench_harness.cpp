// Serial vs OpenMP wall time for a few suites.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "banachproj/harness.hpp"

using namespace banachproj;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_aggregate(const BoundReport& a, const BoundReport& b) {
  return a.trials_run == b.trials_run && a.violations == b.violations &&
         a.informative == b.informative && a.solver_failures == b.solver_failures &&
         a.worst_margin == b.worst_margin && a.median_margin == b.median_margin;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200;
  std::printf("threads available: %d\n", resolve_thread_count(0));
  std::printf("%-14s %8s %10s %10s %8s %s\n", "suite", "trials", "serial_s", "omp_s",
              "speedup", "match");

  const Suite suites[] = {Suite::Lemma1, Suite::Lemma2, Suite::Theorem1, Suite::Theorem2};
  for (Suite s : suites) {
    SuiteConfig c;
    c.suite = s;
    c.p = {2.0, 3.0};
    c.dim = {2, 8};
    c.trials = trials;
    c.seed = 7;
    BoundReport serial, parallel;
    const double ts = seconds([&] { serial = run_suite_serial(c); });
    const double tp = seconds([&] { parallel = run_suite(c); });
    std::printf("%-14s %8zu %10.3f %10.3f %8.2f %s\n", to_string(s), serial.trials_run, ts,
                tp, ts / tp, same_aggregate(serial, parallel) ? "yes" : "NO");
  }
  return 0;
}
