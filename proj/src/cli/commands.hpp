#pragma once

#include <ostream>

namespace ptsusy::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kInvalidInput = 2 };

/// Parses the command line and runs one of
///   profile | verify | spectrum | scatter | figure | gup.
/// Data goes to `out` (or to --out), diagnostics and warnings to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptsusy::cli
