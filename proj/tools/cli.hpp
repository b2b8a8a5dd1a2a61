#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relalg {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).  `color` enables ANSI
/// colors in text reports; NO_COLOR in the environment overrides it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace relalg
