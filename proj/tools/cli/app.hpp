#pragma once

#include <ostream>

namespace kzeta::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsage = 2 };

/// Entry point of the kzeta executable. Subcommands: verify, table, fpi, xi.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kzeta::cli
