#pragma once

#include "chowkit/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace chowkit::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2 };

/// Runs the command line `args` (args[0] is the program name). Reports go
/// to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "symbolic" -> empty; "4" -> {4}; "0,2,7" -> {0,2,7}; "0..50" -> {0,...,50}.
/// Throws std::invalid_argument.
std::vector<long> parse_g_values(const std::string& text);

Report build_verify_report(const std::vector<long>& g_values, const std::string& lemma);
Report build_strata_report(int g, bool oracle, int orient_j);
Report build_determinant_report();

}  // namespace chowkit::cli
