#include "hyperboloid/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>

#include <CLI11.hpp>

#include "hyperboloid/ladder/equivalence.hpp"
#include "hyperboloid/ladder/ladder.hpp"
#include "hyperboloid/specfun/errors.hpp"
#include "hyperboloid/specfun/gamma.hpp"
#include "hyperboloid/specfun/hypergeometric.hpp"
#include "hyperboloid/specfun/jacobi.hpp"
#include "hyperboloid/spectrum/quadrature.hpp"
#include "hyperboloid/spectrum/spectrum.hpp"

namespace hyperboloid::cli {

using eigen::Branch;
using eigen::RadialSolution;

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names{"ode",   "parity",      "asymptotics", "ladder",
                                              "norms", "equivalence", "specfun"};
  return names;
}

Report cmd_classify(const RunConfig& config) {
  config.validate();
  Report r;
  r.command = "classify";
  r.config = config;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    for (const SpectralParam& s : config.lambdas_for(n)) {
      const auto v1 = spectrum::classify_discrete_series(s);
      const auto v2 = spectrum::classify_small_lambda(s);
      const auto d = spectrum::discrete_ktype_set(s);
      ClassifyRow row;
      row.n = n;
      row.rho = s.geometry().rho();
      row.lambda = s.exact_lambda();
      row.offset = s.integer_offset();
      row.even_discrete = v1.even_discrete;
      row.odd_discrete = v1.odd_discrete;
      row.parity_of_U = std::string(spectrum::to_string(spectrum::parity_of_U(s)));
      row.d_min = d.j_min;
      const auto& v = v2 ? *v2 : v1;
      row.small_lambda = v2.has_value();
      row.multiplicity_full = v.multiplicity_full;
      row.multiplicity_temp = v.multiplicity_temp;
      r.rows.push_back(std::move(row));
    }
  }
  return r;
}

namespace {

using Params = std::map<std::string, std::string>;

Params cell(const SpectralParam& s) {
  return {{"n", std::to_string(s.geometry().n())}, {"lambda", specfun::to_string(s.exact_lambda())}};
}

Params with(Params p, const std::string& key, const std::string& value) {
  p[key] = value;
  return p;
}

/// Collects records; library exceptions inside a check become failures.
class Suite {
public:
  Suite(std::string name, std::vector<CheckRecord>& out) : name_(std::move(name)), out_(out) {}

  void numeric(const std::string& check, Params params, double residual, double tol, std::string note = {}) {
    CheckRecord c{name_, check, std::move(params), residual, tol, residual < tol, false, std::move(note)};
    out_.push_back(std::move(c));
  }

  /// Exact checks: residual 0 means the identity holds.
  void exact(const std::string& check, Params params, bool holds, std::string note = {}) {
    CheckRecord c{name_, check, std::move(params), holds ? 0.0 : 1.0, 0.0, holds, false, std::move(note)};
    out_.push_back(std::move(c));
  }

  void skip(const std::string& check, Params params, std::string note) {
    CheckRecord c{name_, check, std::move(params), 0.0, 0.0, false, true, std::move(note)};
    out_.push_back(std::move(c));
  }

  void guarded(const std::string& check, const Params& params, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      CheckRecord c{name_, check, params, std::numeric_limits<double>::infinity(), 0.0, false, false,
                    std::string("error: ") + e.what()};
      out_.push_back(std::move(c));
    }
  }

private:
  std::string name_;
  std::vector<CheckRecord>& out_;
};

using CellFn = std::function<void(Suite&, const SpectralParam&)>;

void for_each_cell(const RunConfig& config, Suite& suite, const CellFn& fn) {
  for (int n = config.n_min; n <= config.n_max; ++n) {
    for (const SpectralParam& s : config.lambdas_for(n)) fn(suite, s);
  }
}

std::vector<long> discrete_ktypes(const SpectralParam& s, long j_max) {
  std::vector<long> out;
  const auto d = spectrum::discrete_ktype_set(s);
  for (long j = 0; j <= j_max; ++j) {
    if (d.contains(j)) out.push_back(j);
  }
  return out;
}

double max_relative_residual(const SpectralParam& s, int j, const RadialSolution& f,
                             const std::vector<double>& grid) {
  const auto fn = [&f](double t) { return f(t); };
  double worst = 0.0;
  for (double t : grid) worst = std::max(worst, eigen::radial_ode_residual(s, j, fn, t).relative());
  return worst;
}

void suite_ode(const RunConfig& config, Suite& suite) {
  const auto grid = config.grid.values();
  std::vector<double> right;
  for (double t : grid) {
    if (t >= 0.5) right.push_back(t);
  }
  for_each_cell(config, suite, [&](Suite& su, const SpectralParam& s) {
    std::vector<Branch> branches{Branch::PhiPlus, Branch::PhiReflected};
    const bool second = s.integer_offset().has_value();
    if (second) branches.push_back(s.geometry().n() % 2 == 0 ? Branch::PhiNegLambda : Branch::SecondKindLog);
    for (Branch b : branches) {
      const std::string name = std::string("residual_") + std::string(eigen::to_string(b));
      const Params p = cell(s);
      su.guarded(name, p, [&] {
        // The log branch is checked on t >= 0.5 only.
        const auto& g = b == Branch::SecondKindLog ? right : grid;
        double worst = 0.0;
        for (int j = 0; j <= config.j_max; ++j) {
          const auto f = b == Branch::PhiPlus || b == Branch::PhiReflected ? RadialSolution::make(s, j, b)
                                                                           : eigen::second_solution(s, j);
          worst = std::max(worst, max_relative_residual(s, j, f, g));
        }
        su.numeric(name, with(p, "j_max", std::to_string(config.j_max)), worst, config.tol("ode"));
      });
    }
  });
}

void suite_parity(const RunConfig& config, Suite& suite) {
  const auto grid = config.grid.values();
  for_each_cell(config, suite, [&](Suite& su, const SpectralParam& s) {
    const Params p = cell(s);
    const auto js = discrete_ktypes(s, config.j_max);
    if (js.empty()) {
      su.skip("reflection", p, "no discrete K-types up to j_max");
      return;
    }
    su.guarded("reflection", p, [&] {
      double worst = 0.0;
      for (long j : js) {
        const auto f = RadialSolution::make(s, static_cast<int>(j), Branch::PhiPlus);
        const double sign = (*f.degree() % 2 == 0) ? 1.0 : -1.0;
        double peak = 0.0, defect = 0.0;
        for (double t : grid) {
          peak = std::max(peak, std::abs(f(t)));
          defect = std::max(defect, std::abs(f(-t) - sign * f(t)));
        }
        worst = std::max(worst, defect / peak);
      }
      su.numeric("reflection", with(p, "j_max", std::to_string(config.j_max)), worst, config.tol("parity"));
    });
    su.guarded("coefficients", p, [&] {
      bool ok = true;
      for (unsigned l = 0; l <= 10; ++l) {
        const auto poly = specfun::jacobi_polynomial(l, s.exact_lambda());
        const Rational sign = l % 2 == 0 ? 1 : -1;
        ok = ok && poly.reflected() == sign * poly;
      }
      su.exact("coefficients", with(p, "l_max", "10"), ok);
    });
  });
}

void suite_asymptotics(const RunConfig& config, Suite& suite) {
  constexpr double kProbe = 12.0;
  for_each_cell(config, suite, [&](Suite& su, const SpectralParam& s) {
    const Params p = cell(s);
    // The subleading term is e^(-2 lambda t) relative; below lambda = 1 it is not
    // negligible at the probe.
    if (s.exact_lambda() < 1) {
      su.skip("gauss_constant", p, "lambda < 1: probe too close for the tolerance");
      return;
    }
    const auto d = spectrum::discrete_ktype_set(s);
    su.guarded("gauss_constant", p, [&] {
      double worst = 0.0;
      bool poles_match = true;
      for (int j = 0; j <= config.j_max; ++j) {
        const auto a = eigen::asymptotic_constant_estimate(s, j, kProbe);
        const bool zero = a.exact_value ? a.exact_value->is_zero() : a.exact == specfun::Complex(0.0);
        poles_match = poles_match && zero == d.contains(j);
        const double err = zero ? std::abs(a.estimate) : std::abs(a.estimate - a.exact) / std::abs(a.exact);
        worst = std::max(worst, err);
      }
      const Params q = with(with(p, "j_max", std::to_string(config.j_max)), "t", "12");
      su.numeric("gauss_constant", q, worst, config.tol("asym"));
      su.exact("pole_detection", q, poles_match);
    });
  });
}

void suite_ladder(const RunConfig& config, Suite& suite) {
  const auto grid = config.grid.values();
  for_each_cell(config, suite, [&](Suite& su, const SpectralParam& s) {
    const Params p = cell(s);
    if (!s.integer_offset()) {
      su.skip("identity", p, "lambda - rho not an integer");
      return;
    }
    const auto js = discrete_ktypes(s, config.j_max);
    su.guarded("identity", p, [&] {
      bool ok = true;
      for (unsigned l = 0; l <= 10; ++l) {
        if (*s.integer_offset() + 1 + static_cast<long>(l) < 0) continue;
        ok = ok && ladder::ladder_identity_defect(s, l).is_zero();
        const auto direct = ladder::ladder_coeffs(s, l);
        const auto derived = ladder::derive_ladder_coeffs_from_identities(s.geometry(), s.exact_lambda(), l);
        ok = ok && direct.A == derived.A && direct.B == derived.B;
      }
      su.exact("identity", with(p, "l_max", "10"), ok);
    });
    if (!js.empty()) {
      su.guarded("residual", p, [&] {
        double worst = 0.0;
        for (long j : js) worst = std::max(worst, ladder::ladder_residual(s, j, grid));
        su.numeric("residual", with(p, "j_max", std::to_string(config.j_max)), worst, config.tol("ladder"));
      });
    }
    su.guarded("connectivity", p, [&] {
      const auto cert = ladder::irreducibility_connectivity(s, config.j_max);
      bool zeros_at_bottom = true;
      for (long z : cert.lowering_zeros) zeros_at_bottom = zeros_at_bottom && cert.bottom && z == *cert.bottom;
      su.exact("connectivity", with(p, "j_max", std::to_string(config.j_max)), cert.connected && zeros_at_bottom,
               cert.vacuous ? "vacuous" : "");
    });
  });
}

void suite_norms(const RunConfig& config, Suite& suite) {
  suite.guarded("closed_form_oracle", {}, [&] {
    // n = 5, lambda = 1, j = 0: phi = sech^3 t, so |phi|^2 cosh^4 t = sech^2 t integrates to 2.
    const eigen::Geometry g(5);
    const auto s = SpectralParam::exact(g, Rational(1));
    const auto d = spectrum::weighted_lp_norm(s, 0, Branch::PhiPlus, 2.0);
    suite.numeric("closed_form_oracle", {{"n", "5"}, {"lambda", "1"}, {"j", "0"}}, std::abs(d.value - 2.0),
                  config.tol("norm"));
  });
  for_each_cell(config, suite, [&](Suite& su, const SpectralParam& s) {
    const Params p = cell(s);
    const auto d = spectrum::discrete_ktype_set(s);
    std::vector<int> inside, outside;
    for (int j = 0; j <= config.j_max; ++j) {
      if (d.contains(j)) {
        if (inside.size() < 3) inside.push_back(j);
      } else if (outside.size() < 2) {
        outside.push_back(j);
      }
    }
    for (int j : inside) {
      const Params q = with(p, "j", std::to_string(j));
      su.guarded("l2_convergence", q, [&] {
        const auto diag = spectrum::weighted_lp_norm(s, j, Branch::PhiPlus, 2.0);
        su.numeric("l2_convergence", q, diag.relative_change, config.tol("conv"));
      });
    }
    for (int j : outside) {
      const Params q = with(p, "j", std::to_string(j));
      su.guarded("growth_rate", q, [&] {
        const auto diag = spectrum::weighted_lp_norm(s, j, Branch::PhiPlus, 2.0);
        su.numeric("growth_rate", q, std::abs(diag.measured_rate / diag.predicted_rate - 1.0),
                   config.tol("growth"));
      });
    }
  });
}

void suite_equivalence(const RunConfig& config, Suite& suite) {
  bool any = false;
  for_each_cell(config, suite, [&](Suite& su, const SpectralParam& s) {
    if (!spectrum::classify_small_lambda(s)) return;
    any = true;
    const Params p = with(cell(s), "j_max", std::to_string(config.j_max));
    su.guarded("invariant_products", p, [&] {
      const auto rep = ladder::equivalence_invariants(s, config.j_max);
      su.numeric("invariant_products", p, rep.max_rel_deviation, config.tol("equiv"));
      su.numeric("fit_residual", p, rep.max_fit_residual, config.tol("fit"));
      su.exact("structure", p, rep.casimir_match && rep.bottoms_match);
    });
  });
  if (!any) suite.skip("invariant_products", {}, "no (n, lambda) in the small-lambda regime");
}

void suite_specfun(const RunConfig& config, Suite& suite) {
  const double tol = config.tol("series");
  suite.guarded("gamma_half_integers", {}, [&] {
    double worst = 0.0;
    for (int twice = 1; twice <= 30; ++twice) {
      const Rational z(twice, 2);
      const auto g = specfun::gamma_exact(z);
      const double ref = std::tgamma(twice / 2.0);
      worst = std::max(worst, std::abs(g->to_double() - ref) / ref);
    }
    suite.numeric("gamma_half_integers", {{"z", "1/2..15"}}, worst, tol);
  });
  suite.guarded("hyp2f1_terminating", {}, [&] {
    double worst = 0.0;
    for (int m = 0; m <= 8; ++m) {
      const specfun::ExactHypergeometricParams e{Rational(-m), Rational(7, 3), Rational(5, 2)};
      for (const Rational& x : {Rational(-3, 4), Rational(1, 3), Rational(9, 10)}) {
        const Rational truth = specfun::hyp2f1_exact(e, x);
        const auto v = specfun::hyp2f1(e.to_float(), x.get_d());
        worst = std::max(worst, std::abs(v.value - truth.get_d()) / std::max(1.0, std::abs(truth.get_d())));
      }
    }
    suite.numeric("hyp2f1_terminating", {{"a", "-8..0"}, {"b", "7/3"}, {"c", "5/2"}}, worst, tol);
  });
  suite.guarded("hyp2f1_elementary", {}, [&] {
    double worst = 0.0;
    for (double x : {-0.9, -0.4, 0.2, 0.45, 0.8}) {
      // F(1,1;2;x) = -log(1-x)/x and F(1/2,1/2;3/2;x^2) = asin(x)/x.
      const auto v = specfun::hyp2f1({1.0, 1.0, 2.0}, x);
      const double ref = -std::log1p(-x) / x;
      worst = std::max(worst, std::abs(v.value - ref) / std::abs(ref));
      const double y = std::abs(x);
      const auto w = specfun::hyp2f1({0.5, 0.5, 1.5}, y * y);
      worst = std::max(worst, std::abs(w.value - std::asin(y) / y) / (std::asin(y) / y));
    }
    suite.numeric("hyp2f1_elementary", {}, worst, tol);
  });
  suite.guarded("gauss_constant", {}, [&] {
    // n = 4, lambda = 1, j = 0: A = 4/(3 pi).
    const specfun::ExactHypergeometricParams e{Rational(5, 2), Rational(1, 2), Rational(2)};
    const auto exact = specfun::gauss_limit_constant_exact(e);
    const double ref = 4.0 / (3.0 * std::numbers::pi);
    const bool form = exact == specfun::ExactScalar(Rational(4, 3), -2);
    const double err = std::abs(specfun::gauss_limit_constant(e.to_float()) - ref) / ref;
    suite.numeric("gauss_constant", {{"a", "5/2"}, {"b", "1/2"}, {"c", "2"}}, err, tol);
    suite.exact("gauss_constant_exact", {{"a", "5/2"}, {"b", "1/2"}, {"c", "2"}}, form);
  });
}

}  // namespace

Report cmd_verify(const RunConfig& config, const std::vector<std::string>& suites) {
  config.validate();
  const auto& known = all_suites();
  std::set<std::string> wanted;
  for (const auto& s : suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) throw UsageError("unknown suite '" + s + "'");
    wanted.insert(s);
  }
  if (suites.empty()) wanted.insert(known.begin(), known.end());

  using Runner = void (*)(const RunConfig&, Suite&);
  const std::map<std::string, Runner> runners{
      {"ode", suite_ode},     {"parity", suite_parity},           {"asymptotics", suite_asymptotics},
      {"ladder", suite_ladder}, {"norms", suite_norms},           {"equivalence", suite_equivalence},
      {"specfun", suite_specfun}};

  Report r;
  r.command = "verify";
  r.config = config;
  for (const auto& name : known) {
    if (!wanted.count(name)) continue;
    Suite suite(name, r.checks);
    runners.at(name)(config, suite);
  }
  r.tally();
  return r;
}

void write_report(const Report& report, Format format, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << render(report, format);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

namespace {

struct Options {
  std::optional<int> n;
  std::string n_range;
  std::vector<std::string> lambdas;
  std::vector<std::string> offsets;
  int j_max = 8;
  std::map<std::string, double> tolerances;
  std::string grid;
  std::string format;
  std::string out;
  std::vector<std::string> suites;
  std::string what;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Single dimension n");
  sub->add_option("--n-range", o.n_range, "Dimension range lo:hi (default 3:8)");
  sub->add_option("--lambda", o.lambdas, "Values of lambda, e.g. 2,5/2,1.25")->delimiter(',')->expected(0, -1);
  sub->add_option("--lambda-offset", o.offsets, "Offsets k with lambda = rho + k")->delimiter(',')->expected(0, -1);
  sub->add_option("--j-max", o.j_max, "Largest K-type j (default 8)");
  for (const auto& [name, value] : default_tolerances()) {
    sub->add_option("--tol-" + name, o.tolerances[name], "Tolerance '" + name + "'")->default_val(value);
  }
  sub->add_option("--grid", o.grid, "t grid lo:hi:points (default -10:10:81)");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", o.out, "Write the report to this file");
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string rest = text.substr(colon + 1);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--n-range expects lo:hi, got '" + text + "'");
  }
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items, const char* flag) {
  std::vector<Rational> out;
  for (const auto& item : items) {
    if (item.empty()) continue;
    try {
      out.push_back(specfun::parse_rational(item));
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": cannot parse '" + item + "'");
    }
  }
  return out;
}

RunConfig build_config(const Options& o, const CLI::App* sub, Format fallback) {
  RunConfig c;
  if (o.n && !o.n_range.empty()) throw UsageError("--n and --n-range are mutually exclusive");
  if (o.n) c.n_min = c.n_max = *o.n;
  if (!o.n_range.empty()) std::tie(c.n_min, c.n_max) = parse_range(o.n_range);
  const bool explicit_lambdas = sub->count("--lambda") > 0 || sub->count("--lambda-offset") > 0;
  c.default_sweep = !explicit_lambdas;
  c.lambdas = parse_rationals(o.lambdas, "--lambda");
  c.offsets = parse_rationals(o.offsets, "--lambda-offset");
  c.j_max = o.j_max;
  c.tolerances = o.tolerances;
  if (!o.grid.empty()) c.grid = parse_grid(o.grid);
  c.format = fallback;
  if (o.format == "json") c.format = Format::json;
  if (o.format == "csv") c.format = Format::csv;
  if (o.format == "text") c.format = Format::text;
  c.validate();
  return c;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenfunctions, discrete series and ladder certificates on the one-sheeted hyperboloid",
               "hyperboloid-cli"};
  app.require_subcommand(1);
  Options o;
  auto* classify = app.add_subcommand("classify", "Discrete-series table over an (n, lambda) sweep");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  auto* exporter = app.add_subcommand("export", "Write a table or verification report to --out");
  for (auto* sub : {classify, verify, exporter}) add_common(sub, o);
  std::string suite_help = "Suites to run (default all):";
  for (const auto& s : all_suites()) suite_help += " " + s;
  verify->add_option("--suite", o.suites, suite_help)->delimiter(',');
  exporter->add_option("--suite", o.suites, suite_help)->delimiter(',');
  exporter->add_option("what", o.what, "table or report")->required()->check(CLI::IsMember({"table", "report"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  try {
    CLI::App* sub = classify->parsed() ? classify : verify->parsed() ? verify : exporter;
    const bool is_export = sub == exporter;
    const RunConfig config = build_config(o, sub, is_export ? Format::json : Format::text);
    if (is_export && o.out.empty()) throw UsageError("export requires --out");

    const bool table = sub == classify || (is_export && o.what == "table");
    const Report report = table ? cmd_classify(config) : cmd_verify(config, o.suites);

    if (!o.out.empty()) {
      write_report(report, config.format, o.out);
      if (!table) out << "passed " << report.summary.passed << ", failed " << report.summary.failed
                      << ", skipped " << report.summary.skipped << "\n";
    } else {
      out << render(report, config.format);
    }
    return report.exit_status();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace hyperboloid::cli
