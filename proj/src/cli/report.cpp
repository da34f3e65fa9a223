#include "hyperboloid/cli/report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hyperboloid::cli {

using nlohmann::json;

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

void Report::tally() {
  summary = {};
  for (const auto& c : checks) {
    if (c.skipped) ++summary.skipped;
    else if (c.pass) ++summary.passed;
    else ++summary.failed;
  }
}

namespace {

// Non-finite doubles are not representable in JSON; they travel as strings.
json encode_double(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

double decode_double(const json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  throw std::runtime_error("bad number '" + s + "'");
}

json encode_rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(specfun::to_string(q));
  return out;
}

std::vector<Rational> decode_rationals(const json& j) {
  std::vector<Rational> out;
  for (const auto& s : j) out.push_back(specfun::parse_rational(s.get<std::string>()));
  return out;
}

json encode_config(const RunConfig& c) {
  json tol = json::object();
  for (const auto& [k, v] : c.tolerances) tol[k] = encode_double(v);
  return {{"n_range", {c.n_min, c.n_max}},
          {"lambda", encode_rationals(c.lambdas)},
          {"lambda_offset", encode_rationals(c.offsets)},
          {"default_sweep", c.default_sweep},
          {"j_max", c.j_max},
          {"tolerances", tol},
          {"grid", {{"lo", c.grid.lo}, {"hi", c.grid.hi}, {"points", c.grid.points}}},
          {"format", to_string(c.format)}};
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw std::runtime_error("unknown format '" + s + "'");
}

RunConfig decode_config(const json& j) {
  RunConfig c;
  c.n_min = j.at("n_range").at(0).get<int>();
  c.n_max = j.at("n_range").at(1).get<int>();
  c.lambdas = decode_rationals(j.at("lambda"));
  c.offsets = decode_rationals(j.at("lambda_offset"));
  c.default_sweep = j.at("default_sweep").get<bool>();
  c.j_max = j.at("j_max").get<int>();
  c.tolerances.clear();
  for (const auto& [k, v] : j.at("tolerances").items()) c.tolerances[k] = decode_double(v);
  c.grid.lo = j.at("grid").at("lo").get<double>();
  c.grid.hi = j.at("grid").at("hi").get<double>();
  c.grid.points = j.at("grid").at("points").get<int>();
  c.format = parse_format(j.at("format").get<std::string>());
  return c;
}

template <class T>
json optional_value(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json encode_row(const ClassifyRow& r) {
  return {{"n", r.n},
          {"rho", specfun::to_string(r.rho)},
          {"lambda", specfun::to_string(r.lambda)},
          {"offset", optional_value(r.offset)},
          {"even_discrete", r.even_discrete},
          {"odd_discrete", r.odd_discrete},
          {"parity_of_U", r.parity_of_U},
          {"d_min", optional_value(r.d_min)},
          {"small_lambda", r.small_lambda},
          {"multiplicity_full", r.multiplicity_full},
          {"multiplicity_temp", r.multiplicity_temp}};
}

ClassifyRow decode_row(const json& j) {
  ClassifyRow r;
  r.n = j.at("n").get<int>();
  r.rho = specfun::parse_rational(j.at("rho").get<std::string>());
  r.lambda = specfun::parse_rational(j.at("lambda").get<std::string>());
  r.offset = optional_from<long>(j.at("offset"));
  r.even_discrete = j.at("even_discrete").get<bool>();
  r.odd_discrete = j.at("odd_discrete").get<bool>();
  r.parity_of_U = j.at("parity_of_U").get<std::string>();
  r.d_min = optional_from<long>(j.at("d_min"));
  r.small_lambda = j.at("small_lambda").get<bool>();
  r.multiplicity_full = j.at("multiplicity_full").get<int>();
  r.multiplicity_temp = j.at("multiplicity_temp").get<int>();
  return r;
}

json encode_check(const CheckRecord& c) {
  return {{"suite", c.suite},
          {"name", c.name},
          {"parameters", c.parameters},
          {"max_residual", encode_double(c.max_residual)},
          {"tolerance", encode_double(c.tolerance)},
          {"pass", c.pass},
          {"skipped", c.skipped},
          {"note", c.note}};
}

CheckRecord decode_check(const json& j) {
  CheckRecord c;
  c.suite = j.at("suite").get<std::string>();
  c.name = j.at("name").get<std::string>();
  c.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  c.max_residual = decode_double(j.at("max_residual"));
  c.tolerance = decode_double(j.at("tolerance"));
  c.pass = j.at("pass").get<bool>();
  c.skipped = j.at("skipped").get<bool>();
  c.note = j.at("note").get<std::string>();
  return c;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join_parameters(const std::map<std::string, std::string>& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

template <class T>
std::string opt_string(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

bool is_table(const Report& r) { return r.command == "classify"; }

}  // namespace

std::string to_json(const Report& r) {
  json j = {{"version", kSchemaVersion}, {"command", r.command}, {"config", encode_config(r.config)}};
  if (is_table(r)) {
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back(encode_row(row));
    j["rows"] = rows;
  } else {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(encode_check(c));
    j["checks"] = checks;
    j["summary"] = {{"passed", r.summary.passed}, {"failed", r.summary.failed}, {"skipped", r.summary.skipped}};
  }
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("version").get<std::string>() != kSchemaVersion) {
      throw std::runtime_error("unsupported report version");
    }
    Report r;
    r.command = j.at("command").get<std::string>();
    r.config = decode_config(j.at("config"));
    if (j.contains("rows")) {
      for (const auto& row : j.at("rows")) r.rows.push_back(decode_row(row));
    }
    if (j.contains("checks")) {
      for (const auto& c : j.at("checks")) r.checks.push_back(decode_check(c));
      const auto& s = j.at("summary");
      r.summary = {s.at("passed").get<int>(), s.at("failed").get<int>(), s.at("skipped").get<int>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  if (is_table(r)) {
    os << "n,rho,lambda,offset,even_discrete,odd_discrete,parity_of_U,d_min,small_lambda,"
          "multiplicity_full,multiplicity_temp\n";
    for (const auto& x : r.rows) {
      os << x.n << ',' << specfun::to_string(x.rho) << ',' << specfun::to_string(x.lambda) << ','
         << opt_string(x.offset) << ',' << yes_no(x.even_discrete) << ',' << yes_no(x.odd_discrete) << ','
         << x.parity_of_U << ',' << opt_string(x.d_min) << ',' << yes_no(x.small_lambda) << ','
         << x.multiplicity_full << ',' << x.multiplicity_temp << '\n';
    }
  } else {
    os << "suite,name,parameters,max_residual,tolerance,status,note\n";
    for (const auto& c : r.checks) {
      os << c.suite << ',' << csv_field(c.name) << ',' << csv_field(join_parameters(c.parameters)) << ','
         << format_double(c.max_residual) << ',' << format_double(c.tolerance) << ','
         << (c.skipped ? "skip" : c.pass ? "pass" : "fail") << ',' << csv_field(c.note) << '\n';
    }
  }
  return os.str();
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  if (is_table(r)) {
    os << std::left << std::setw(4) << "n" << std::setw(6) << "rho" << std::setw(8) << "lambda" << std::setw(8)
       << "k" << std::setw(6) << "even" << std::setw(6) << "odd" << std::setw(7) << "U" << std::setw(7)
       << "D_min" << "mult(full,temp)\n";
    for (const auto& x : r.rows) {
      os << std::setw(4) << x.n << std::setw(6) << specfun::to_string(x.rho) << std::setw(8)
         << specfun::to_string(x.lambda) << std::setw(8) << (x.offset ? std::to_string(*x.offset) : "-")
         << std::setw(6) << (x.even_discrete ? "yes" : "no") << std::setw(6) << (x.odd_discrete ? "yes" : "no")
         << std::setw(7) << x.parity_of_U << std::setw(7) << (x.d_min ? std::to_string(*x.d_min) : "-") << '('
         << x.multiplicity_full << ',' << x.multiplicity_temp << ')' << (x.small_lambda ? " small-lambda" : "")
         << '\n';
    }
    os << r.rows.size() << " rows\n";
  } else {
    for (const auto& c : r.checks) {
      os << (c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL") << "  " << c.suite << '/' << c.name;
      if (!c.parameters.empty()) os << " [" << join_parameters(c.parameters) << ']';
      if (!c.skipped) os << "  residual " << format_double(c.max_residual) << " tol " << format_double(c.tolerance);
      if (!c.note.empty()) os << "  (" << c.note << ')';
      os << '\n';
    }
    os << "passed " << r.summary.passed << ", failed " << r.summary.failed << ", skipped " << r.summary.skipped
       << '\n';
  }
  return os.str();
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::json: return to_json(r);
    case Format::csv: return to_csv(r);
    case Format::text: return to_text(r);
  }
  return to_text(r);
}

}  // namespace hyperboloid::cli
