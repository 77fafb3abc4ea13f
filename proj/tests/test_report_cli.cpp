#include "catch2/catch_amalgamated.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "rootcal/cli.hpp"

using namespace rootcal;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("rootcal");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult res;
  res.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  res.out = out.str();
  return res;
}

// Whitespace-free view of pretty-printed JSON, for content assertions.
std::string squash(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\n') out.push_back(c);
  }
  return out;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("json objects dump with sorted keys, independent of insertion order") {
  JsonValue a = JsonValue::object();
  a.set("zeta", 1);
  a.set("alpha", 2);
  JsonValue b = JsonValue::object();
  b.set("alpha", 2);
  b.set("zeta", 1);
  REQUIRE(a.dump() == b.dump());
  REQUIRE(squash(a.dump()) == "{\"alpha\":2,\"zeta\":1}");
  // set() on an existing key replaces.
  a.set("alpha", 7);
  REQUIRE(squash(a.dump()) == "{\"alpha\":7,\"zeta\":1}");
}

TEST_CASE("json renders scalars deterministically") {
  REQUIRE(JsonValue(true).dump() == "true\n");
  REQUIRE(JsonValue(0.1).dump() == "0.10000000000000001\n");
  REQUIRE(JsonValue(2.5).dump() == "2.5\n");
  REQUIRE(JsonValue(Int("123456789012345678901234567890")).dump() ==
          "123456789012345678901234567890\n");
  REQUIRE(JsonValue("he said \"hi\"\n\x01").dump() == "\"he said \\\"hi\\\"\\n\\u0001\"\n");
  REQUIRE_THROWS_AS(JsonValue(std::numeric_limits<double>::infinity()).dump(), std::domain_error);
}

TEST_CASE("csv quoting") {
  REQUIRE(csv_line({"a", "b,c", "d\"e", "plain"}) == "a,\"b,c\",\"d\"\"e\",plain\n");
  REQUIRE(format_double(2.5) == "2.5");
  REQUIRE(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("orbit command, frozen example") {
  const CliResult res = run({"orbit", "--element", "sigma", "--k", "1", "--alpha", "0,1,0,0,0"});
  REQUIRE(res.code == 0);
  const std::string sq = squash(res.out);
  REQUIRE(contains(sq, "\"command\":\"orbit\""));
  REQUIRE(contains(sq, "\"result_closed\":[0,1,1,2,1]"));
  REQUIRE(contains(sq, "\"result_matrix\":[0,1,1,2,1]"));
  REQUIRE(contains(sq, "\"agree\":true"));
  REQUIRE(contains(sq, "\"schema_version\":\"1\""));
  REQUIRE(contains(sq, "\"status\":\"ok\""));

  // Byte-identical on repetition.
  const CliResult again = run({"orbit", "--element", "sigma", "--k", "1", "--alpha", "0,1,0,0,0"});
  REQUIRE(again.code == 0);
  REQUIRE(again.out == res.out);
}

TEST_CASE("orbit command accepts the hyperbolic element and single methods") {
  const CliResult res = run({"orbit", "--element", "sigmahat", "--k", "-1", "--alpha", "0,0,1,0,0",
                             "--method", "closed"});
  REQUIRE(res.code == 0);
  const std::string sq = squash(res.out);
  REQUIRE(contains(sq, "\"result_closed\":[0,1,1,1,2]"));
  REQUIRE_FALSE(contains(sq, "result_matrix"));
}

TEST_CASE("charpoly command") {
  const CliResult hyp = run({"charpoly", "--element", "sigmahat"});
  REQUIRE(hyp.code == 0);
  REQUIRE(contains(squash(hyp.out), "\"coefficients_descending\":[1,0,-3,-3,0,1]"));
  const CliResult aff = run({"charpoly", "--element", "sigma"});
  REQUIRE(aff.code == 0);
  REQUIRE(contains(squash(aff.out), "\"coefficients_descending\":[1,-1,-2,2,1,-1]"));
}

TEST_CASE("roots enum command in both formats") {
  const CliResult js = run({"roots", "enum", "--bound", "1", "--affine-only"});
  REQUIRE(js.code == 0);
  REQUIRE(contains(squash(js.out), "\"count\":24"));
  REQUIRE(contains(squash(js.out), "\"affine_only\":true"));

  const CliResult csv = run({"roots", "enum", "--bound", "1", "--affine-only", "--format", "csv"});
  REQUIRE(csv.code == 0);
  REQUIRE(csv.out.substr(0, 10) == "q,r,l,m,n\n");
  REQUIRE(std::count(csv.out.begin(), csv.out.end(), '\n') == 25);

  const CliResult again = run({"roots", "enum", "--bound", "1", "--affine-only", "--format", "csv"});
  REQUIRE(again.out == csv.out);
}

TEST_CASE("strings check command over the default window") {
  const CliResult res = run({"strings", "check"});
  REQUIRE(res.code == 0);
  const std::string sq = squash(res.out);
  REQUIRE(contains(sq, "\"cases\":1008"));
  REQUIRE(contains(sq, "\"ok\":true"));
  REQUIRE(contains(sq, "\"failures\":[]"));
}

TEST_CASE("coverage command") {
  const CliResult res = run({"coverage", "--bound", "2"});
  REQUIRE(res.code == 0);
  const std::string sq = squash(res.out);
  REQUIRE(contains(sq, "\"exact_cover\":true"));
  REQUIRE(contains(sq, "\"uncovered\":0"));
}

TEST_CASE("potential eval command compares the routes") {
  const CliResult res = run({"potential", "eval", "--q", "0.31,0.07,-0.23,-0.61,0,1.7", "--mode",
                             "all", "--trunc", "2000", "--bound", "8"});
  REQUIRE(res.code == 0);
  const std::string sq = squash(res.out);
  REQUIRE(contains(sq, "value_closed"));
  REQUIRE(contains(sq, "value_direct"));
  REQUIRE(contains(sq, "value_enumerated"));
  REQUIRE(contains(sq, "gap_direct"));
}

TEST_CASE("potential invariance command") {
  const CliResult res = run({"potential", "invariance", "--q", "0.31,0.07,-0.23,-0.61,0,1.7",
                             "--p", "0.4,-0.2,0.9,0.1,0.3,0.8"});
  REQUIRE(res.code == 0);
  const std::string sq = squash(res.out);
  REQUIRE(contains(sq, "\"name\":\"sigma0_printed\""));
  REQUIRE(contains(sq, "\"name\":\"coxeter\""));
  REQUIRE(contains(sq, "sigma3_printed"));
  REQUIRE(contains(sq, "term_permutation_residuals"));
}

TEST_CASE("potential limit command in csv") {
  const CliResult res = run({"potential", "limit", "--q", "0.31,0.07,-0.23,-0.61,0,1", "--q6",
                             "10,100,1000", "--format", "csv"});
  REQUIRE(res.code == 0);
  REQUIRE(res.out.substr(0, 21) == "q6,value,limit,ratio\n");
  REQUIRE(std::count(res.out.begin(), res.out.end(), '\n') == 4);
}

TEST_CASE("usage failures exit 2 with an error envelope") {
  const CliResult unknown = run({"frobnicate"});
  REQUIRE(unknown.code == 2);
  REQUIRE(contains(squash(unknown.out), "\"status\":\"error\""));

  const CliResult bad_alpha = run({"orbit", "--element", "sigma", "--k", "1", "--alpha",
                                   "0,1,x,0,0"});
  REQUIRE(bad_alpha.code == 2);
  REQUIRE(contains(squash(bad_alpha.out), "\"status\":\"error\""));

  const CliResult short_alpha = run({"orbit", "--element", "sigma", "--k", "1", "--alpha",
                                     "0,1,0"});
  REQUIRE(short_alpha.code == 2);

  const CliResult bad_element = run({"orbit", "--element", "tau", "--k", "1", "--alpha",
                                     "0,1,0,0,0"});
  REQUIRE(bad_element.code == 2);

  const CliResult csv_unsupported = run({"orbit", "--element", "sigma", "--k", "1", "--alpha",
                                         "0,1,0,0,0", "--format", "csv"});
  REQUIRE(csv_unsupported.code == 2);
  REQUIRE(contains(csv_unsupported.out, "csv output is only available"));

  const CliResult guard = run({"orbit", "--element", "sigmahat", "--k", "121", "--alpha",
                               "0,1,0,0,0"});
  REQUIRE(guard.code == 2);

  const CliResult missing = run({"potential", "eval"});
  REQUIRE(missing.code == 2);
}

TEST_CASE("evaluation failures exit 3") {
  const CliResult singular = run({"potential", "eval", "--q", "0,0.2,0.4,0.6,0,0", "--mode",
                                  "closed"});
  REQUIRE(singular.code == 3);
  REQUIRE(contains(squash(singular.out), "\"status\":\"error\""));

  const CliResult pole = run({"potential", "eval", "--q", "0.5,0.5,-0.3,0.9,0,2", "--mode",
                              "closed"});
  REQUIRE(pole.code == 3);
}

TEST_CASE("help exits cleanly") {
  const CliResult res = run({"--help"});
  REQUIRE(res.code == 0);
  REQUIRE(contains(res.out, "orbit"));
}
