#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tvalue_lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = tvalue::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("value") {
  const auto t2 = run({"value", "--index", "2"});
  CHECK(t2.code == 0);
  CHECK(t2.out.find("t(2) = 1.2337005501") == 0);
  CHECK(t2.out.find("err_bound = ") != std::string::npos);
  CHECK(t2.out.find("cutoff = 999999") != std::string::npos);

  const auto t21 = run({"value", "--index", "2,1", "--format", "json"});
  CHECK(t21.code == 0);
  const auto j = nlohmann::json::parse(t21.out);
  CHECK(std::abs(j["value"].get<double>() - 0.32923616284981707) < 1e-9);

  const auto star = run({"value", "--index", "2,1", "--star", "--cutoff", "100001"});
  CHECK(star.code == 0);
  CHECK(star.out.find("t*(2,1) = 1.3810359") == 0);

  const auto bad = run({"value", "--index", "1,2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("non-admissible index") != std::string::npos);
  CHECK(run({"value", "--index", "2,x"}).code == 2);
  CHECK(run({"value"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"value", "--index", "2", "--format", "xml"}).code == 2);
}

TEST_CASE("table") {
  const auto two = run({"table", "--k-max", "2"});
  CHECK(two.code == 0);
  const auto rows = lines(two.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "k,n,s,oracle_value,oracle_err,genfun_value,genfun_err,abs_diff");
  CHECK(rows[1].rfind("2,1,1,1.23370055", 0) == 0);

  const auto four = run({"table", "--k-max", "4", "--cutoff", "100001", "--n-terms", "20000"});
  CHECK(four.code == 0);
  const auto r4 = lines(four.out);
  REQUIRE(r4.size() == 8);
  CHECK(r4[1].rfind("2,1,1,", 0) == 0);
  CHECK(r4[7].rfind("4,3,1,", 0) == 0);

  CHECK(run({"table", "--k-max", "1"}).code == 2);
  CHECK(run({"table", "--k-max", "9", "--degree-cap", "6"}).code == 2);
  CHECK(run({"table", "--k-max", "2", "--degree-cap", "13"}).code == 2);
  CHECK(run({"table", "--k-max", "2", "--out", "/nonexistent-dir/table.csv"}).code == 3);

  const auto path = std::filesystem::temp_directory_path() / "tvalue_table_test.csv";
  CHECK(run({"table", "--k-max", "3", "--out", path.string()}).code == 0);
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(lines(content.str()).size() == 4);
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  const auto ode = run({"verify", "ode"});
  CHECK(ode.code == 0);
  const auto j = nlohmann::ordered_json::parse(ode.out);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"suite", "config", "cases", "overall_pass"});
  CHECK(j["suite"] == "ode");
  CHECK(j["overall_pass"] == true);
  std::vector<std::string> case_keys;
  for (const auto& [key, value] : j["cases"][0].items()) case_keys.push_back(key);
  CHECK(case_keys ==
        std::vector<std::string>{"label", "lhs", "lhs_err", "rhs", "rhs_err", "abs_diff", "tol", "pass"});
  for (const auto& c : j["cases"]) CHECK(c["lhs"].get<double>() <= 1e-12);

  CHECK(run({"verify", "nosuch"}).code == 2);
  CHECK(run({"verify", "theorem1", "--k-max", "11"}).code == 2);

  const auto theorem = run({"verify", "theorem1", "--k-max", "6"});
  CHECK(theorem.code == 0);
  const auto tj = nlohmann::json::parse(theorem.out);
  CHECK(tj["cases"].size() == 22);
  for (const auto& c : tj["cases"]) CHECK(c["pass"] == true);

  const auto csv = run({"verify", "u0", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("u0,\"t(2,2)\",") != std::string::npos);

  const auto text = run({"verify", "u0", "--star", "--format", "text"});
  CHECK(text.out.find("u0: PASS") != std::string::npos);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"verify", "weighted-sum", "--k-max", "5", "--cutoff", "50001"};
  const auto a = run(args);
  setenv("TVALUE_LAB_THREADS", "1", 1);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  setenv("TVALUE_LAB_THREADS", "zero", 1);
  CHECK(run(args).code == 2);
  unsetenv("TVALUE_LAB_THREADS");
}
