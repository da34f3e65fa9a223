#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperboloid/eigen/geometry.hpp"

namespace hyperboloid::cli {

using eigen::Geometry;
using eigen::SpectralParam;
using specfun::Rational;

enum class Format { json, csv, text };
std::string to_string(Format f);

/// Thrown for invalid command lines and configurations; maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Grid {
  double lo = -10.0;
  double hi = 10.0;
  int points = 81;

  std::vector<double> values() const;
  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Parses "lo:hi:points".
Grid parse_grid(const std::string& text);

/// Named tolerances with their defaults.
std::map<std::string, double> default_tolerances();

struct RunConfig {
  int n_min = 3;
  int n_max = 8;
  /// Absolute values of lambda and offsets k with lambda = rho + k.
  std::vector<Rational> lambdas;
  std::vector<Rational> offsets;
  /// Without explicit lambdas: integer offsets k with 1 - rho <= k <= 6.
  bool default_sweep = true;
  int j_max = 8;
  std::map<std::string, double> tolerances = default_tolerances();
  Grid grid;
  Format format = Format::text;

  double tol(const std::string& name) const;
  /// Throws UsageError when an invariant is violated.
  void validate() const;
  /// The lambda values for dimension n, in input order, deduplicated.
  std::vector<SpectralParam> lambdas_for(int n) const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

}  // namespace hyperboloid::cli
