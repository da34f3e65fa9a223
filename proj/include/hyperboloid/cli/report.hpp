#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hyperboloid/cli/config.hpp"

namespace hyperboloid::cli {

/// One line of the discrete-series table.
struct ClassifyRow {
  int n = 0;
  Rational rho;
  Rational lambda;
  /// lambda - rho when it is an integer.
  std::optional<long> offset;
  bool even_discrete = false;
  bool odd_discrete = false;
  std::string parity_of_U;
  /// Smallest element of D_lambda.
  std::optional<long> d_min;
  /// Set in the small-lambda regime.
  bool small_lambda = false;
  int multiplicity_full = 0;
  int multiplicity_temp = 0;

  friend bool operator==(const ClassifyRow&, const ClassifyRow&) = default;
};

struct CheckRecord {
  std::string suite;
  std::string name;
  std::map<std::string, std::string> parameters;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Skipped checks carry no residual and count neither as pass nor failure.
  bool skipped = false;
  std::string note;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Summary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<ClassifyRow> rows;
  std::vector<CheckRecord> checks;
  Summary summary;

  /// Recomputes summary from checks.
  void tally();
  int exit_status() const { return summary.failed > 0 ? 1 : 0; }

  friend bool operator==(const Report&, const Report&) = default;
};

inline constexpr const char* kSchemaVersion = "1";

std::string to_json(const Report& r);
/// Throws std::runtime_error on malformed input or a different schema version.
Report report_from_json(const std::string& text);
std::string to_csv(const Report& r);
std::string to_text(const Report& r);
std::string render(const Report& r, Format f);

/// Shortest decimal that reads back as the same double.
std::string format_double(double x);

}  // namespace hyperboloid::cli
