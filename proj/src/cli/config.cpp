#include "hyperboloid/cli/config.hpp"

#include <algorithm>
#include <charconv>

namespace hyperboloid::cli {

std::string to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "text";
}

std::vector<double> Grid::values() const {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) out.push_back(points == 1 ? lo : lo + (hi - lo) * i / (points - 1));
  return out;
}

Grid parse_grid(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) throw UsageError("--grid expects lo:hi:points, got '" + text + "'");
  Grid g;
  try {
    std::size_t used = 0;
    g.lo = std::stod(text.substr(0, a), &used);
    if (used != a) throw std::invalid_argument("lo");
    const std::string hi = text.substr(a + 1, b - a - 1);
    g.hi = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument("hi");
    const std::string pts = text.substr(b + 1);
    const auto r = std::from_chars(pts.data(), pts.data() + pts.size(), g.points);
    if (r.ec != std::errc() || r.ptr != pts.data() + pts.size()) throw std::invalid_argument("points");
  } catch (const std::invalid_argument&) {
    throw UsageError("--grid expects lo:hi:points, got '" + text + "'");
  } catch (const std::out_of_range&) {
    throw UsageError("--grid value out of range: '" + text + "'");
  }
  if (!(g.hi > g.lo) || g.points < 2) throw UsageError("--grid needs lo < hi and at least 2 points");
  return g;
}

std::map<std::string, double> default_tolerances() {
  return {{"series", 1e-12}, {"ode", 1e-8},   {"parity", 1e-10}, {"asym", 1e-5},  {"fit", 1e-8},
          {"equiv", 1e-6},   {"norm", 1e-9},  {"ladder", 1e-10}, {"conv", 1e-6},  {"growth", 0.2}};
}

double RunConfig::tol(const std::string& name) const {
  const auto it = tolerances.find(name);
  if (it == tolerances.end()) throw UsageError("unknown tolerance '" + name + "'");
  return it->second;
}

void RunConfig::validate() const {
  if (n_min < 3 || n_max > 12 || n_min > n_max) {
    throw UsageError("n range must lie within [3, 12], got [" + std::to_string(n_min) + ", " +
                     std::to_string(n_max) + "]");
  }
  if (j_max < 2) throw UsageError("--j-max must be at least 2");
  const auto known = default_tolerances();
  for (const auto& [name, value] : tolerances) {
    if (!known.count(name)) throw UsageError("unknown tolerance '" + name + "'");
    // Zero is accepted: it makes every numerical check fail, which is useful for testing the plumbing.
    if (!(value >= 0.0)) throw UsageError("tolerance '" + name + "' must be non-negative");
  }
  for (const Rational& l : lambdas) {
    if (sgn(l) <= 0) throw UsageError("lambda must be positive, got " + specfun::to_string(l));
  }
}

std::vector<SpectralParam> RunConfig::lambdas_for(int n) const {
  const Geometry g(n);
  std::vector<Rational> values;
  auto push = [&](const Rational& v) {
    Rational c = v;
    c.canonicalize();
    if (std::find(values.begin(), values.end(), c) == values.end()) values.push_back(c);
  };
  if (default_sweep) {
    // Integer k from the first one with k >= 1 - rho, i.e. lambda >= 1.
    for (long k = -(n - 3) / 2; k <= 6; ++k) push(g.rho() + k);
  }
  for (const Rational& l : lambdas) push(l);
  for (const Rational& k : offsets) {
    if (sgn(g.rho() + k) > 0) push(g.rho() + k);
  }
  std::vector<SpectralParam> out;
  for (const Rational& v : values) out.push_back(SpectralParam::exact(g, v));
  return out;
}

}  // namespace hyperboloid::cli
