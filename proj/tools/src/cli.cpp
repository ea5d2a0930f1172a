#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tvalue/error.hpp"
#include "tvalue/genfun.hpp"
#include "tvalue/identities.hpp"
#include "tvalue/indices.hpp"
#include "tvalue/oracle.hpp"
#include "tvalue/report.hpp"

namespace tvalue::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  long long cutoff = oracle::kDefaultCutoff;
  long long n_terms = genfun::kDefaultTerms;
  int degree_cap = genfun::kDefaultDegreeCap;
  double tol = 1e-6;
  std::string format;
  std::string out_path;
  bool star = false;
  int k_max = 0;
  std::string index;
  std::string suite;
};

// Thrown for bad invocations that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  // Round to 16 significant digits; the serializer then prints the shortest
  // form of the rounded double.
  return std::stod(format_number(x));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

unsigned threads_from_env() {
  const char* raw = std::getenv("TVALUE_LAB_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError("TVALUE_LAB_THREADS must be a positive integer");
  return static_cast<unsigned>(v);
}

identities::Config make_config(const Options& o) {
  identities::Config cfg;
  cfg.cutoff = o.cutoff;
  cfg.n_terms = o.n_terms;
  cfg.degree_cap = o.degree_cap;
  cfg.threads = threads_from_env();
  cfg.tol.base = o.tol;
  return cfg;
}

// Writes through `out` or a file opened at `path`; reports stream failure.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    out.flush();
    if (!out) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  body(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

void add_numeric_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--cutoff", o.cutoff, "Oracle truncation: largest odd integer summed")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--n-terms", o.n_terms, "Terms of the z = 1 generating-function series")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--degree-cap", o.degree_cap, "Total degree kept in (u, v, w)")
      ->check(CLI::Range(1, 12));
}

void add_output_options(CLI::App& cmd, Options& o, const std::string& default_format) {
  cmd.add_option("--format", o.format, "Output format (default " + default_format + ")")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd.add_option("--out", o.out_path, "Write output to this file instead of stdout");
}

// ---- value ---------------------------------------------------------------

int cmd_value(const Options& o, std::ostream& out, std::ostream& err) {
  Index ix = [&] {
    try {
      return Index::parse(o.index);
    } catch (const Error&) {
      throw UsageError("cannot parse index '" + o.index + "'");
    }
  }();
  if (!ix.admissible()) {
    err << "error: non-admissible index " << ix.to_string() << " (first part must exceed 1)\n";
    return kUsage;
  }
  const Estimate e = oracle::eval(ix, o.star, o.cutoff);
  const std::string name = std::string(o.star ? "t*" : "t") + ix.to_string();
  emit(o.out_path, out, [&](std::ostream& os) {
    if (o.format == "json") {
      json j;
      j["index"] = name;
      j["value"] = number(e.value);
      j["err_bound"] = number(e.err_bound);
      j["cutoff"] = e.cutoff;
      os << j.dump(2) << '\n';
    } else if (o.format == "csv") {
      os << "index,value,err_bound,cutoff\n"
         << csv_field(name) << ',' << format_number(e.value) << ',' << format_number(e.err_bound)
         << ',' << e.cutoff << '\n';
    } else {
      os << name << " = " << format_number(e.value) << '\n'
         << "err_bound = " << format_number(e.err_bound) << '\n'
         << "cutoff = " << e.cutoff << '\n';
    }
  });
  return kPass;
}

// ---- table ---------------------------------------------------------------

int cmd_table(const Options& o, std::ostream& out) {
  if (o.k_max < 2) throw UsageError("--k-max must be at least 2");
  if (o.k_max > o.degree_cap + 2) {
    throw UsageError("--k-max " + std::to_string(o.k_max) + " needs --degree-cap >= " +
                     std::to_string(o.k_max - 2));
  }
  const auto cfg = make_config(o);
  const SumTable table = oracle::sum_table(o.k_max, o.star, cfg.cutoff, cfg.threads);
  const auto phi = genfun::phi0_at_one(o.star, cfg.degree_cap, cfg.n_terms);

  struct Row {
    WeightDepthHeight key;
    Estimate oracle;
    Estimate genfun;
  };
  std::vector<Row> rows;
  for (const auto& [key, e] : table.entries()) {
    rows.push_back({key, e, genfun::extract_g0(phi, key.k, key.n, key.s)});
  }

  emit(o.out_path, out, [&](std::ostream& os) {
    if (o.format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json j;
        j["k"] = r.key.k;
        j["n"] = r.key.n;
        j["s"] = r.key.s;
        j["oracle_value"] = number(r.oracle.value);
        j["oracle_err"] = number(r.oracle.err_bound);
        j["genfun_value"] = number(r.genfun.value);
        j["genfun_err"] = number(r.genfun.err_bound);
        j["abs_diff"] = number(std::abs(r.oracle.value - r.genfun.value));
        arr.push_back(std::move(j));
      }
      os << arr.dump(2) << '\n';
      return;
    }
    const char sep = o.format == "csv" ? ',' : ' ';
    std::string header = "k,n,s,oracle_value,oracle_err,genfun_value,genfun_err,abs_diff";
    if (sep == ' ') std::replace(header.begin(), header.end(), ',', ' ');
    os << header << '\n';
    for (const auto& r : rows) {
      os << r.key.k << sep << r.key.n << sep << r.key.s << sep << format_number(r.oracle.value) << sep
         << format_number(r.oracle.err_bound) << sep << format_number(r.genfun.value) << sep
         << format_number(r.genfun.err_bound) << sep
         << format_number(std::abs(r.oracle.value - r.genfun.value)) << '\n';
    }
  });
  return kPass;
}

// ---- verify --------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem1",     "theorem2", "height-one", "max-height",
                                              "product",      "u0",       "weighted-sum", "ode",
                                              "all"};
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& suite, const Options& o,
                                          identities::Workbench& wb) {
  using namespace identities;
  const int cap_k = o.degree_cap + 2;
  const auto k_or = [&](int fallback) {
    const int k = o.k_max > 0 ? o.k_max : std::min(fallback, cap_k);
    if (k < 2) throw UsageError("--k-max must be at least 2");
    return k;
  };
  if (suite == "theorem1") return {verify_theorem_main(wb, false, k_or(8))};
  if (suite == "theorem2") return {verify_theorem_main(wb, true, k_or(8))};
  if (suite == "height-one") return {verify_height_one(wb, o.star, k_or(8))};
  if (suite == "max-height") return {verify_max_height(wb, o.star, k_or(10))};
  if (suite == "product") return {verify_product_identity(wb, k_or(10))};
  if (suite == "u0") return {verify_u0_specialization(wb, o.star, k_or(8) / 2)};
  if (suite == "weighted-sum") return {verify_weighted_sum(wb, k_or(8))};
  if (suite == "ode") return {verify_ode(wb.config())};
  // all
  std::vector<VerificationReport> reps;
  reps.push_back(verify_theorem_main(wb, false, k_or(8)));
  reps.push_back(verify_theorem_main(wb, true, k_or(8)));
  for (bool star : {false, true}) reps.push_back(verify_height_one(wb, star, k_or(8)));
  for (bool star : {false, true}) reps.push_back(verify_max_height(wb, star, k_or(10)));
  reps.push_back(verify_product_identity(wb, k_or(10)));
  for (bool star : {false, true}) reps.push_back(verify_u0_specialization(wb, star, k_or(8) / 2));
  reps.push_back(verify_weighted_sum(wb, k_or(8)));
  reps.push_back(verify_ode(wb.config()));
  return reps;
}

json report_json(const VerificationReport& r, const identities::Config& cfg) {
  json j;
  j["suite"] = r.suite;
  j["config"] = {{"cutoff", cfg.cutoff},
                 {"n_terms", cfg.n_terms},
                 {"degree_cap", cfg.degree_cap},
                 {"z_len", cfg.z_len},
                 {"tol", number(cfg.tol.base)}};
  json cases = json::array();
  for (const auto& c : r.cases) {
    json cj;
    cj["label"] = c.label;
    cj["lhs"] = number(c.lhs.value);
    cj["lhs_err"] = number(c.lhs.err_bound);
    cj["rhs"] = number(c.rhs.value);
    cj["rhs_err"] = number(c.rhs.err_bound);
    cj["abs_diff"] = number(c.abs_diff);
    cj["tol"] = number(c.tol);
    cj["pass"] = c.pass;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  j["overall_pass"] = r.overall_pass;
  return j;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
    err << "error: unknown suite '" << o.suite << "'; expected one of";
    for (const auto& n : names) err << ' ' << n;
    err << '\n';
    return kUsage;
  }
  identities::Workbench wb(make_config(o));
  const auto reports = run_suite(o.suite, o, wb);
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.overall_pass;

  emit(o.out_path, out, [&](std::ostream& os) {
    if (o.format == "json") {
      if (o.suite == "all") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r, wb.config()));
        os << arr.dump(2) << '\n';
      } else {
        os << report_json(reports.front(), wb.config()).dump(2) << '\n';
      }
    } else if (o.format == "csv") {
      os << "suite,label,lhs,lhs_err,rhs,rhs_err,abs_diff,tol,pass\n";
      for (const auto& r : reports)
        for (const auto& c : r.cases) {
          os << csv_field(r.suite) << ',' << csv_field(c.label) << ',' << format_number(c.lhs.value)
             << ',' << format_number(c.lhs.err_bound) << ',' << format_number(c.rhs.value) << ','
             << format_number(c.rhs.err_bound) << ',' << format_number(c.abs_diff) << ','
             << format_number(c.tol) << ',' << (c.pass ? "true" : "false") << '\n';
        }
    } else {
      for (const auto& r : reports) print_summary(os, r);
    }
  });
  if (!pass && o.format != "text") {
    for (const auto& r : reports)
      if (!r.overall_pass) print_summary(err, r);
  }
  return pass ? kPass : kVerificationFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple t-values: oracle sums, generating functions and identity checks",
               "tvalue_lab"};
  app.require_subcommand(1);
  Options o;

  auto* value = app.add_subcommand("value", "Evaluate t(k) or t*(k) by direct summation");
  value->add_option("--index", o.index, "Comma-separated index, e.g. 2,1")->required();
  value->add_flag("--star", o.star, "Evaluate the star variant");
  value->add_option("--cutoff", o.cutoff, "Largest odd integer summed")->check(CLI::PositiveNumber);
  add_output_options(*value, o, "text");

  auto* table = app.add_subcommand("table", "Tabulate G0(k,n,s) from the oracle and the generating function");
  table->add_option("--k-max", o.k_max, "Largest weight")->required();
  table->add_flag("--star", o.star, "Tabulate G0* instead of G0");
  add_numeric_options(*table, o);
  add_output_options(*table, o, "csv");

  auto* verify = app.add_subcommand("verify", "Run an identity suite and report every case");
  verify->add_option("suite", o.suite, "theorem1, theorem2, height-one, max-height, product, u0, "
                                       "weighted-sum, ode or all")
      ->required();
  verify->add_option("--k-max", o.k_max, "Largest weight checked (suite default if omitted)");
  verify->add_flag("--star", o.star, "Star variant for height-one, max-height and u0");
  verify->add_option("--tol", o.tol, "Base tolerance")->check(CLI::PositiveNumber);
  add_numeric_options(*verify, o);
  add_output_options(*verify, o, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*value) {
      if (o.format.empty()) o.format = "text";
      return cmd_value(o, out, err);
    }
    if (*table) {
      if (o.format.empty()) o.format = "csv";
      return cmd_table(o, out);
    }
    if (o.format.empty()) o.format = "json";
    return cmd_verify(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace tvalue::cli
