#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "doctest.h"
#include "hyperboloid/cli/commands.hpp"
#include "hyperboloid/spectrum/spectrum.hpp"

using namespace hyperboloid;
using namespace hyperboloid::cli;

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hyperboloid_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

RunConfig n5(std::vector<const char*> lambdas) {
  RunConfig c;
  c.n_min = c.n_max = 5;
  c.default_sweep = false;
  for (const char* l : lambdas) c.lambdas.push_back(specfun::parse_rational(l));
  return c;
}

}  // namespace

TEST_CASE("classify n = 5 matches the classifier") {
  const auto r = cmd_classify(n5({"1", "2", "3", "5/2"}));
  REQUIRE(r.rows.size() == 4);
  const auto& small = r.rows[0];
  CHECK(small.lambda == 1);
  CHECK(small.offset == -1);
  CHECK(small.even_discrete);
  CHECK_FALSE(small.odd_discrete);
  CHECK(small.small_lambda);
  CHECK(small.multiplicity_full == 2);
  CHECK(small.multiplicity_temp == 1);
  CHECK(small.d_min == 0);

  CHECK(r.rows[1].odd_discrete);
  CHECK_FALSE(r.rows[1].even_discrete);
  CHECK(r.rows[1].parity_of_U == "odd");
  CHECK(r.rows[1].d_min == 1);
  CHECK(r.rows[1].multiplicity_full == 1);

  CHECK(r.rows[2].even_discrete);
  CHECK(r.rows[2].d_min == 2);

  CHECK_FALSE(r.rows[3].even_discrete);
  CHECK_FALSE(r.rows[3].odd_discrete);
  CHECK_FALSE(r.rows[3].offset.has_value());
  CHECK_FALSE(r.rows[3].d_min.has_value());
  CHECK(r.rows[3].multiplicity_full == 0);

  // Rows agree with the library classifier.
  for (const auto& row : r.rows) {
    const auto s = SpectralParam::exact(eigen::Geometry(5), row.lambda);
    const auto v = spectrum::classify_discrete_series(s);
    CHECK(row.even_discrete == v.even_discrete);
    CHECK(row.odd_discrete == v.odd_discrete);
  }
}

TEST_CASE("classify n = 4, lambda = 5/2 is an even discrete row") {
  RunConfig c;
  c.n_min = c.n_max = 4;
  c.default_sweep = false;
  c.lambdas = {Rational(5, 2)};
  const auto r = cmd_classify(c);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].rho == Rational(3, 2));
  CHECK(r.rows[0].even_discrete);
  CHECK_FALSE(r.rows[0].odd_discrete);
}

TEST_CASE("default sweep covers integer k in [1 - rho, 6]") {
  RunConfig c;
  for (int n = 3; n <= 8; ++n) {
    const auto ls = c.lambdas_for(n);
    const eigen::Geometry g(n);
    REQUIRE_FALSE(ls.empty());
    CHECK(ls.back().exact_lambda() == g.rho() + 6);
    for (const auto& s : ls) {
      CHECK(s.exact_lambda() >= 1);
      CHECK(s.integer_offset().has_value());
      CHECK(s.exact_lambda() - g.rho() >= 1 - g.rho());
    }
  }
  CHECK(c.lambdas_for(5).size() == 8);
  CHECK(c.lambdas_for(3).size() == 7);
  CHECK(c.lambdas_for(4).size() == 7);
  CHECK(c.lambdas_for(4).front().exact_lambda() == Rational(3, 2));
  CHECK(c.lambdas_for(8).front().exact_lambda() == Rational(3, 2));
}

TEST_CASE("offsets and explicit values merge without duplicates") {
  RunConfig c = n5({"3"});
  c.offsets = {Rational(1), Rational(1, 4), Rational(-5)};
  const auto ls = c.lambdas_for(5);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0].exact_lambda() == 3);
  CHECK(ls[1].exact_lambda() == Rational(9, 4));
}

TEST_CASE("empty lambda list gives an empty table") {
  const auto r = invoke({"classify", "--n", "5", "--lambda", ""});
  CHECK(r.status == 0);
  CHECK(r.out.find("0 rows") != std::string::npos);
  const auto j = invoke({"classify", "--n", "5", "--lambda", "", "--format", "json"});
  CHECK(j.status == 0);
  CHECK(report_from_json(j.out).rows.empty());
}

TEST_CASE("CSV export of the n = 5 classification has 4 data rows") {
  const auto path = scratch("n5.csv");
  const auto r = invoke({"export", "table", "--n", "5", "--lambda", "1,2,3,5/2", "--format", "csv", "--out",
                      path.string()});
  REQUIRE(r.status == 0);
  const std::string text = slurp(path);
  CHECK(count_lines(text) == 5);
  CHECK(text.rfind("n,rho,lambda,offset,", 0) == 0);
  CHECK(text.find("5,2,5/2,,false,false,none,,false,0,0\n") != std::string::npos);
}

TEST_CASE("JSON export round-trips") {
  const auto path = scratch("table.json");
  REQUIRE(invoke({"export", "table", "--n-range", "4:6", "--out", path.string()}).status == 0);
  const std::string text = slurp(path);
  const Report r = report_from_json(text);
  CHECK(r.command == "classify");
  CHECK(r.config.n_min == 4);
  CHECK(r.config.n_max == 6);
  CHECK(r == cmd_classify(r.config));
  CHECK(to_json(r) == text);
  CHECK(text.find("\"version\": \"1\"") != std::string::npos);
  // Exact rationals travel as strings.
  CHECK(text.find("\"lambda\": \"5/2\"") != std::string::npos);

  Report v;
  v.command = "verify";
  v.config = n5({"1"});
  v.checks.push_back({"ode", "residual", {{"n", "5"}, {"lambda", "1"}}, 1.2345678901234567e-9, 1e-8, true, false, ""});
  v.checks.push_back({"norms", "oracle", {}, std::numeric_limits<double>::infinity(), 0.0, false, false, "error: x"});
  v.checks.push_back({"equivalence", "products", {}, 0.0, 0.0, false, true, "n/a"});
  v.tally();
  const Report back = report_from_json(to_json(v));
  CHECK(back == v);
  CHECK(back.summary.passed == 1);
  CHECK(back.summary.failed == 1);
  CHECK(back.summary.skipped == 1);
}

TEST_CASE("malformed or foreign JSON is rejected") {
  CHECK_THROWS(report_from_json("{"));
  CHECK_THROWS(report_from_json(R"({"version": "2", "command": "classify"})"));
}

TEST_CASE("identical configs give byte-identical JSON") {
  const std::vector<std::string> args{"verify", "--n", "5", "--lambda", "1,2", "--suite", "ode,parity,ladder",
                                      "--format", "json"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"checks\"") != std::string::npos);
}

TEST_CASE("shortest round-trip float formatting") {
  for (double x : {0.1, 1e-8, 2.0 / 3.0, 123456.789, -1.7976931348623157e308}) {
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(1e-8) == "1e-08");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("verify ode on the default config passes") {
  const auto r = cmd_verify(RunConfig{}, {"ode"});
  CHECK(r.summary.failed == 0);
  CHECK(r.summary.passed == static_cast<int>(r.checks.size()));
  CHECK(r.checks.size() >= 50);
  for (const auto& c : r.checks) CHECK(c.max_residual < 1e-8);
}

TEST_CASE("verify equivalence at n = 5, lambda = 1") {
  const auto r = cmd_verify(n5({"1"}), {"equivalence"});
  CHECK(r.exit_status() == 0);
  bool seen = false;
  for (const auto& c : r.checks) {
    if (c.name == "invariant_products") {
      seen = true;
      CHECK(c.max_residual < 1e-6);
    }
  }
  CHECK(seen);
}

TEST_CASE("every suite passes on a small sweep and summaries match records") {
  RunConfig c;
  c.n_min = 4;
  c.n_max = 5;
  c.j_max = 4;
  const auto r = cmd_verify(c, {});
  CHECK(r.summary.failed == 0);
  CHECK(r.summary.passed + r.summary.failed + r.summary.skipped == static_cast<int>(r.checks.size()));
  std::set<std::string> suites;
  for (const auto& ch : r.checks) suites.insert(ch.suite);
  CHECK(suites.size() == all_suites().size());
}

TEST_CASE("zero tolerances fail every numerical check") {
  RunConfig c = n5({"1", "2", "5/2"});
  for (auto& [name, value] : c.tolerances) value = 0.0;
  const auto r = cmd_verify(c, {});
  CHECK(r.exit_status() == 1);
  for (const std::string& suite : all_suites()) {
    bool failed = false;
    for (const auto& ch : r.checks) failed = failed || (ch.suite == suite && !ch.pass && !ch.skipped);
    CHECK_MESSAGE(failed, suite);
  }
  for (const auto& ch : r.checks) {
    // Only exact identities survive a zero tolerance.
    if (ch.pass) CHECK(ch.max_residual == 0.0);
  }
}

TEST_CASE("exit status 1 on failures through the command line") {
  const auto r = invoke({"verify", "--n", "5", "--lambda", "2", "--suite", "ode", "--tol-ode", "0"});
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("I/O failures exit with 3") {
  const auto missing = scratch("absent") / "deeper" / "x.json";
  CHECK(invoke({"export", "table", "--n", "5", "--out", missing.string()}).status == 3);
  // A directory cannot be opened as a file even with full permissions.
  const auto dir = scratch("a_directory");
  std::filesystem::create_directories(dir);
  CHECK(invoke({"export", "report", "--n", "5", "--suite", "specfun", "--out", dir.string()}).status == 3);
  CHECK_THROWS_AS(write_report(Report{}, Format::json, dir.string()), IoError);
}

TEST_CASE("usage errors exit with 2") {
  const std::vector<std::vector<std::string>> bad{
      {},
      {"frobnicate"},
      {"classify", "--n", "2"},
      {"classify", "--n", "13"},
      {"classify", "--n-range", "3:13"},
      {"classify", "--n-range", "6:4"},
      {"classify", "--n-range", "x"},
      {"classify", "--n", "5", "--n-range", "3:4"},
      {"classify", "--j-max", "1"},
      {"classify", "--lambda", "-1"},
      {"classify", "--lambda", "abc"},
      {"classify", "--format", "xml"},
      {"classify", "--grid", "1:0:10"},
      {"classify", "--grid", "0:1"},
      {"verify", "--tol-ode", "-1"},
      {"verify", "--tol-bogus", "1"},
      {"verify", "--suite", "ode,bogus"},
      {"export", "table"},
      {"export", "bogus", "--out", "x"},
  };
  for (const auto& args : bad) {
    const auto r = invoke(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    CHECK_MESSAGE(r.status == 2, joined);
    CHECK_MESSAGE(!r.err.empty(), joined);
  }
  CHECK_THROWS_AS(cmd_verify(RunConfig{}, {"bogus"}), UsageError);
  RunConfig c;
  c.j_max = 1;
  CHECK_THROWS_AS(cmd_classify(c), UsageError);
}

TEST_CASE("help exits with 0") {
  const auto r = invoke({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("classify") != std::string::npos);
}

TEST_CASE("grid parsing") {
  const Grid g = parse_grid("-2:3:6");
  CHECK(g.lo == -2.0);
  CHECK(g.hi == 3.0);
  CHECK(g.values() == std::vector<double>{-2, -1, 0, 1, 2, 3});
  CHECK(Grid{}.values().size() == 81);
}
