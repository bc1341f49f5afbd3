#pragma once

#include <iosfwd>
#include <string>

namespace linksplit::cli {

enum ExitCode { kOk = 0, kUsage = 2, kParse = 3, kInvariant = 4 };

/// Runs the `linksplit` command line; output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linksplit::cli
