#include <cstdio>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "negord/cli.hpp"
#include "negord/families.hpp"
#include "negord/table.hpp"

using namespace negord;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string cell(const std::string& csv, long row, long col) {
  return parse_csv(csv).at(static_cast<std::size_t>(row + 1)).at(static_cast<std::size_t>(col + 1));
}

}  // namespace

TEST_CASE("table examples") {
  auto r = run({"table", "y1", "--lambda", "1", "--n", "0..9", "--k", "0..9", "--format", "csv"});
  CHECK(r.code == exit_code::ok);
  CHECK(cell(r.out, 4, 4) == "85/3");
  r = run({"table", "e-neg", "--lambda", "1", "--n", "1..9", "--k", "0..9"});
  CHECK(cell(r.out, 4, 3) == "171/4");
  r = run({"table", "y2", "--symbolic", "--n", "0..5", "--k", "0..3"});
  CHECK(cell(r.out, 2, 1) == R"({"-1":"1/2","1":"1/2"})");
}

TEST_CASE("y1 lambda = 1 table equals the golden fixture") {
  const auto r = run({"table", "y1", "--lambda", "1", "--n", "0..9", "--k", "0..9", "--format", "csv"});
  CHECK(r.out == fixtures::read("y1_lambda1.csv"));
}

TEST_CASE("csv round-trips byte for byte") {
  for (const auto& f : family_catalog()) {
    for (const char* lam : {"1", "-3/5", "symbolic"}) {
      std::vector<std::string> args{"table", f.tag, "--n", "0..5", "--k", "0..4", "--x", "1/2"};
      if (std::string(lam) == "symbolic") {
        if (!f.symbolic) continue;
        args.push_back("--symbolic");
      } else {
        args.insert(args.end(), {"--lambda", lam});
      }
      const auto r = run(args);
      CAPTURE(f.tag);
      CAPTURE(lam);
      REQUIRE(r.code == exit_code::ok);
      CHECK(emit_csv(parse_csv(r.out)) == r.out);
    }
  }
  const auto annotated = run({"table", "y1", "--symbolic", "--n", "0..5", "--k", "0..4", "--known-typos"});
  CHECK(emit_csv(parse_csv(annotated.out)) == annotated.out);
  CHECK(annotated.out.find("[printed: 27/2*L^3 + 8*L + 1/2*L]") != std::string::npos);
}

TEST_CASE("csv parser edge cases") {
  const auto rows = parse_csv("a,\"b,\"\"c\"\"\",\n1,2,3");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][1] == "b,\"c\"");
  CHECK(rows[0][2].empty());
  CHECK(rows[1][2] == "3");
  CHECK_THROWS_AS(parse_csv("\"open"), std::invalid_argument);
}

TEST_CASE("other formats") {
  auto r = run({"table", "y1", "--symbolic", "--n", "0..2", "--k", "0..2", "--format", "latex"});
  CHECK(r.out.find("\\begin{tabular}{llll}") == 0);
  CHECK(r.out.find("$2$ & $0$ & $\\lambda $ & $2\\lambda ^{2}+\\lambda $ \\\\") != std::string::npos);
  r = run({"table", "y2", "--symbolic", "--n", "1..1", "--k", "1..1", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["values"][0]["-1"] == "-1/2");
  r = run({"table", "fib", "--n", "0..6", "--format", "text"});
  CHECK(r.out.find("6  8") != std::string::npos);
  r = run({"table", "e-neg", "--lambda", "1", "--n", "9..9", "--k", "2..2", "--format", "json", "--known-typos"});
  CHECK(nlohmann::json::parse(r.out)["known_typos"][0]["printed"] == "513/2");
  CHECK(latex_value(Rational(-3, 4)) == "-\\frac{3}{4}");
}

TEST_CASE("eval") {
  auto r = run({"eval", "y1", "5", "2", "--lambda", "1"});
  CHECK(r.out == "17\n");
  r = run({"eval", "y2", "2", "2", "--lambda", "1", "--method", "all"});
  CHECK(r.code == exit_code::ok);
  CHECK(r.out == "explicit 2/3\nseries 2/3\nrecurrence 2/3\n");
  CHECK(run({"eval", "T", "3", "2"}).out == "5\n");
  CHECK(run({"eval", "bernoulli", "2", "--x", "2"}).out == "13/6\n");
  CHECK(run({"eval", "y2", "1", "1", "--symbolic"}).out == "{\"-1\":\"-1/2\",\"1\":\"1/2\"}\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == exit_code::usage);
  CHECK(run({"frobnicate"}).code == exit_code::usage);
  CHECK(run({"table", "nope"}).code == exit_code::usage);
  CHECK(run({"table", "y1", "--n", "4..2"}).code == exit_code::usage);
  CHECK(run({"table", "y1", "--n", "a..2"}).code == exit_code::usage);
  CHECK(run({"table", "y1", "--format", "xml"}).code == exit_code::usage);
  CHECK(run({"table", "y2", "--lambda", "0", "--n", "0..2", "--k", "1..2"}).code == exit_code::usage);
  CHECK(run({"table", "y2", "--lambda", "1/0"}).code == exit_code::usage);
  CHECK(run({"eval", "y1", "x"}).code == exit_code::usage);
  CHECK(run({"eval", "y1", "1", "1", "--method", "fast"}).code == exit_code::usage);
  CHECK(run({"eval", "bernoulli", "1", "--method", "recurrence"}).code == exit_code::usage);
  CHECK(run({"verify", "--n-max", "1"}).code == exit_code::usage);
  CHECK(run({"verify", "--json", "/nonexistent-dir/x.json", "--n-max", "2", "--k-max", "2"}).code == exit_code::io);
  CHECK(run({"--help"}).code == exit_code::ok);
}

TEST_CASE("verify writes a JSON report") {
  const auto file = std::filesystem::temp_directory_path() / "negord_verify_test.json";
  const auto r = run({"verify", "--n-max", "3", "--k-max", "3", "--lambdas", "1,2", "--json", file.string(), "--only",
                      "I-25,I-21,I-21c", "--threads", "2"});
  CHECK(r.code == exit_code::ok);
  std::ifstream in(file);
  const auto j = nlohmann::json::parse(in);
  bool found = false;
  for (const auto& e : j["identities"]) found = found || (e["id"] == "I-25" && e["status"] == "pass");
  CHECK(found);
  std::filesystem::remove(file);
  // An unmet expectation turns the exit code nonzero.
  CHECK(run({"verify", "--n-max", "2", "--k-max", "2", "--only", "I-05"}).code == exit_code::disagreement);
}

TEST_CASE("listing commands") {
  CHECK(run({"families"}).out.find("lucas-order") != std::string::npos);
  CHECK(run({"identities"}).out.find("I-29c") != std::string::npos);
}
