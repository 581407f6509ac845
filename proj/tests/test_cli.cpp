#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "hqp/cli.hpp"
#include "json.hpp"

using hqp::cli::Outcome;
using nlohmann::json;

namespace {

std::string problem(const std::string& name) { return std::string(HQP_PROBLEM_DIR) + "/" + name; }

Outcome run(std::vector<std::string> args) { return hqp::cli::run(args); }

std::string scratch(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("hqp_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("check exit codes and verdicts") {
  const auto herm = run({"check", problem("hermitian.od")});
  CHECK(herm.exit_code == hqp::cli::kExitTrue);
  const auto j = json::parse(herm.out);
  CHECK(j["is_order_domain"] == true);
  CHECK(j["diagnostics"]["d"] == 6);
  CHECK(j["diagnostics"]["ri"] == 2);
  CHECK(j["initial_ideal"] == json::array({"y^2"}));
  CHECK(herm.err.rfind("check: ", 0) == 0);
  CHECK(herm.err.find(" ms") != std::string::npos);

  const auto ree = run({"check", problem("ree.od")});
  CHECK(ree.exit_code == hqp::cli::kExitFalse);
  const auto r = json::parse(ree.out);
  CHECK(r["is_order_domain"] == false);
  CHECK(r["c2"]["witness"]["monomials"].size() == 2);

  const auto remark = run({"check", problem("remark.od")});
  CHECK(remark.exit_code == hqp::cli::kExitFalse);
  CHECK(json::parse(remark.out)["c2"]["failure"] == "prefix");
}

TEST_CASE("output is deterministic") {
  for (const auto& cmd : {"check", "quasi-poly", "hilbert-series"}) {
    const auto a = run({cmd, problem("gk.od")});
    const auto b = run({cmd, problem("gk.od")});
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
  }
  CHECK(run({"selftest"}).out == run({"selftest"}).out);
}

TEST_CASE("quasi-poly on GK has 756 constant pieces") {
  const auto o = run({"quasi-poly", problem("gk.od")});
  REQUIRE(o.exit_code == 0);
  const auto j = json::parse(o.out);
  CHECK(j["d"] == 756);
  CHECK(j["pieces"].size() == 756);
  for (const auto& p : j["pieces"]) CHECK(p == json::array({"1"}));
  CHECK(j["distinct_piece_count"] == 1);
  CHECK(j["numerator"] == "1 - t^84 - t^189 + t^273");
}

TEST_CASE("hilbert-fn and hilbert-series") {
  const auto o = run({"hilbert-fn", problem("hermitian.od"), "--kmax", "8"});
  CHECK(json::parse(o.out)["values"] == json::array({"1", "0", "1", "1", "1", "1", "1", "1", "1"}));
  const auto s = json::parse(run({"hilbert-series", problem("remark.od")}).out);
  CHECK(s["numerator"] == "1 - 2*t^2 + t^3");
  CHECK(s["ri"] == 2);
  const auto pretty = run({"hilbert-series", problem("hermitian.od"), "--json-pretty"});
  CHECK(pretty.out.find("\n  ") != std::string::npos);
  CHECK(json::parse(pretty.out) == json::parse(run({"hilbert-series", problem("hermitian.od")}).out));
}

TEST_CASE("code commands on the Hermitian curve") {
  const auto b = json::parse(run({"code-bound", problem("hermitian.od")}).out);
  CHECK(b["n"] == 8);
  CHECK(b["k"] == 4);
  CHECK(b["primal_bound"] == 4);
  CHECK(b["dual_bound"] == 4);
  const auto m = json::parse(run({"min-distance", problem("hermitian.od"), "--k", "2"}).out);
  CHECK(m["k"] == 2);
  CHECK(m["min_distance"] == 6);
  CHECK(m["dual_min_distance"] == 2);
  const auto refused = run({"code-bound", problem("ree.od"), "--k", "2"});
  CHECK(refused.exit_code == hqp::cli::kExitError);
  CHECK(json::parse(refused.out)["error"]["kind"].is_string());

  const auto matrix = (std::filesystem::temp_directory_path() / "hqp_cli_matrix.txt").string();
  CHECK(run({"code-bound", problem("hermitian.od"), "--matrix-out", matrix}).exit_code == 0);
  std::ifstream in(matrix);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 4);
}

TEST_CASE("errors are reported as JSON") {
  const auto bad = scratch("bad.od", "field = Q\nvars = x, y\nweights = 1, 1\nideal = x^2 + * y\n");
  const auto o = run({"check", bad});
  CHECK(o.exit_code == hqp::cli::kExitError);
  const auto j = json::parse(o.out);
  CHECK(j["error"]["kind"] == "SyntaxError");
  CHECK(j["error"]["location"]["line"] == 4);
  CHECK(j["error"]["message"].is_string());

  const auto weights = scratch("weights.od", "field = Q\nvars = x, y\nweights = 1, -2\n");
  CHECK(json::parse(run({"check", weights}).out)["error"]["kind"] == "NonPositiveWeight");
  CHECK(run({"check", "/nonexistent/problem.od"}).exit_code == hqp::cli::kExitError);
  CHECK(run({"frobnicate"}).exit_code == hqp::cli::kExitError);
  CHECK(run({"check", problem("hermitian.od"), "--tiebreak", "grevlex"}).exit_code == hqp::cli::kExitError);
}

TEST_CASE("budgets map to ResourceExhausted") {
  const auto o = run({"check", problem("ree.od"), "--budget-pairs", "1"});
  CHECK(o.exit_code == hqp::cli::kExitResourceExhausted);
  CHECK(json::parse(o.out)["error"]["kind"] == "ResourceExhausted");
  const auto p = run({"code-bound", problem("hermitian.od"), "--budget-points", "10"});
  CHECK(p.exit_code == hqp::cli::kExitResourceExhausted);
}

TEST_CASE("tie-break override") {
  const auto a = json::parse(run({"check", problem("hermitian.od"), "--tiebreak", "degrevlex"}).out);
  CHECK(a["is_order_domain"] == true);
}

TEST_CASE("selftest") {
  const auto o = run({"selftest"});
  CHECK(o.exit_code == 0);
  const auto j = json::parse(o.out);
  CHECK(j["passed"] == true);
  CHECK(j["cases"].size() == 4);
}
