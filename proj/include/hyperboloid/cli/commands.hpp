#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hyperboloid/cli/report.hpp"

namespace hyperboloid::cli {

/// Suite names accepted by cmd_verify, in execution order.
const std::vector<std::string>& all_suites();

/// Discrete-series table over the configured (n, lambda) sweep.
Report cmd_classify(const RunConfig& config);

/// Runs the named suites; an unknown name is a UsageError.
Report cmd_verify(const RunConfig& config, const std::vector<std::string>& suites);

/// Thrown when an output file cannot be written; maps to exit status 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Writes the rendered report to path.
void write_report(const Report& report, Format format, const std::string& path);

/// Entry point of the hyperboloid-cli executable. args excludes the program name.
/// Exit status: 0 all checks pass, 1 verification failures, 2 usage error, 3 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperboloid::cli
