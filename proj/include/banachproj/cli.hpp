#pragma once

#include <iosfwd>

namespace banachproj {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNotConverged = 2,
  kExitViolation = 3,
};

/// Subcommands: project, hausdorff, verify, moduli. Output is JSON or CSV on
/// `out`; diagnostics go to `err`.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace banachproj
