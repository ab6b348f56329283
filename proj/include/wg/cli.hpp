#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wg::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kDomain = 3 };

/// Runs wgcalc with the given arguments (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wg::cli
