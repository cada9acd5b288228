#pragma once

#include <ostream>

namespace hochschild::cli {

enum ExitCode : int { kOk = 0, kDomainFailure = 1, kUsageError = 2 };

/// Full command line front end. The report goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hochschild::cli
