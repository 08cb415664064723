#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ascurve::cli {

/// Runs one command line (without the program name).  JSON goes to `out`,
/// help text and diagnostics to `err`; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ascurve::cli
