#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "commands.hpp"
#include "helpers.hpp"
#include "impactzeta/genfun.hpp"
#include "impactzeta/orders.hpp"
#include "json_codec.hpp"

using namespace impactzeta;
using namespace impactzeta::cli;
using testing::poly;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  Result r = invoke(std::move(args));
  REQUIRE(r.code == kExitOk);
  return Json::parse(r.out);
}

int binary_exit(const std::string& args) {
  std::string cmd = std::string(IMPACTZETA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("zeta numerators") {
  Json doc = invoke_json({"zeta", "--case", "ramified", "-n", "2", "--format", "json"});
  CHECK(doc["tool"] == "impactzeta");
  CHECK(doc["status"] == "pass");
  Json want = Json::parse(R"([[0,0,"1"],[1,2,"1"],[2,4,"1"]])");
  CHECK(doc["results"]["numerator"]["terms"] == want);

  Json split = invoke_json({"zeta", "--case", "split", "-n", "0"});
  CHECK(poly_from_json(split["results"]["numerator"]) == BiPoly::constant(1));
  CHECK(poly_from_json(split["results"]["denominator"]) == BiPoly::one_minus_x(1).pow(2));
}

TEST_CASE("zeta series at q = 3") {
  Json doc = invoke_json({"zeta", "--case", "unramified", "-n", "1", "--q", "3", "--series-terms", "4"});
  // (1 + X + 3X^2) / (1 - X^2) = 1 + X + 4X^2 + X^3 + 4X^4 + ...
  Json want = Json::parse(R"(["1","1","4","1","4"])");
  CHECK(doc["results"]["series"] == want);
}

TEST_CASE("json round trip") {
  for (const char* c : {"ramified", "unramified", "split"})
    for (int n = 0; n <= 4; ++n) {
      Json doc = invoke_json({"zeta", "--case", c, "-n", std::to_string(n)});
      auto ext = orders::ExtensionCase::make(orders::parse_case(c));
      auto z = orders::full_zeta(ext, n);
      CHECK(poly_from_json(doc["results"]["numerator"]) == z.numerator);
      CHECK(poly_from_json(doc["results"]["denominator"]) == z.denominator);
      CHECK(rational_from_json(doc["results"]["principal"]).equivalent(z.principal));
    }
  Json g = invoke_json({"genfun", "--basin", "split", "-n", "3"});
  CHECK(rational_from_json(g["results"]["basin"]).equivalent(genfun::basin_genfun(BasinKind::Split, 3)));
  BiPoly big = poly({{3, 1, 1}}).scaled(mpz_class("123456789012345678901234567890"));
  CHECK(poly_from_json(poly_to_json(big)) == big);
}

TEST_CASE("enumerate examples") {
  Json ram = invoke_json({"enumerate", "--case", "ramified", "--p", "3", "-n", "1", "--max-contribution", "3"});
  CHECK(ram["results"]["principal_count"] == 7);
  CHECK(ram["results"]["type_histogram"] == Json::parse(R"({"0":1,"2":3,"3":3})"));

  Json spl = invoke_json({"enumerate", "--case", "split", "--p", "3", "-n", "0", "--max-contribution", "2"});
  CHECK(spl["results"]["ideal_count"] == spl["results"]["principal_count"]);
  CHECK(spl["results"]["contribution_histogram"] == Json::parse(R"({"0":1,"1":2,"2":3})"));

  Json unr = invoke_json({"enumerate", "--case", "unramified", "--p", "5", "-n", "1", "--max-contribution", "2"});
  CHECK(unr["results"]["contribution_histogram"] == Json::parse(R"({"0":1,"2":6})"));
  CHECK(unr["status"] == "pass");
}

TEST_CASE("enumerate csv") {
  Result r = invoke({"enumerate", "--case", "split", "--p", "3", "-n", "0", "--max-contribution", "2",
                     "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("case,p,n,type,contribution,vertex,distance,principal\n", 0) == 0);
  CHECK(count_lines(r.out) == 1 + 6);
}

TEST_CASE("tree exports") {
  Result dot = invoke({"tree", "--basin", "unramified", "--m", "2", "--radius", "2", "--format", "dot"});
  REQUIRE(dot.code == kExitOk);
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = dot.out.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  CHECK(nodes == 10);

  Json ram = invoke_json({"tree", "--basin", "ramified", "--m", "2", "--radius", "1"});
  CHECK(ram["results"]["layer_sizes"] == Json::parse(R"({"0":2,"1":4})"));

  Json spl = invoke_json({"tree", "--basin", "split", "--m", "2", "--radius", "1", "--halfwidth", "3"});
  CHECK(spl["results"]["layer_sizes"] == Json::parse(R"({"0":7,"1":7})"));
  for (const auto& v : spl["results"]["vertices"]) CHECK(v.contains("height"));
}

TEST_CASE("counts") {
  Json doc = invoke_json({"counts", "--basin", "split", "--m", "3", "-n", "1", "--max-d", "4"});
  CHECK(doc["results"]["rows"][2]["r_closed"] == "2");
  CHECK(doc["results"]["rows"][2]["r_oracle"] == "2");
  CHECK(doc["status"] == "pass");
}

TEST_CASE("verify suites") {
  Json ids = invoke_json({"verify", "--suite", "identities", "--max-n", "8"});
  CHECK(ids["status"] == "pass");
  CHECK(ids["results"]["suites"]["identities"]["failures"] == 0);
  CHECK(invoke_json({"verify", "--suite", "oracle", "--m", "2", "--max-n", "5"})["status"] == "pass");
  CHECK(invoke_json({"verify", "--suite", "arithmetic", "--p", "3", "--max-n", "2", "--max-contribution", "6"})
            ["status"] == "pass");
}

TEST_CASE("determinism") {
  std::vector<std::string> args{"enumerate", "--case", "split", "--p", "3", "-n", "1", "--max-contribution", "4"};
  Result a = invoke(args), b = invoke(args);
  args.insert(args.end(), {"--threads", "2"});
  Result c = invoke(args);
  CHECK(a.out == b.out);
  Json ja = Json::parse(a.out), jc = Json::parse(c.out);
  CHECK(ja["results"] == jc["results"]);
}

TEST_CASE("output file") {
  const std::string path = "test_cli_output.json";
  Result r = invoke({"--output", path, "zeta", "--case", "split", "-n", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(Json::parse(buf.str())["command"] == "zeta");
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(invoke({"zeta", "--case", "inert", "-n", "1"}).code == kExitUsage);
  CHECK(invoke({"zeta", "--case", "split"}).code == kExitUsage);
  CHECK(invoke({"enumerate", "--case", "split", "--p", "4", "-n", "1"}).code == kExitUsage);
  CHECK(invoke({"tree", "--basin", "split", "--m", "2", "--radius", "3", "--halfwidth", "1"}).code == kExitUsage);
  CHECK(invoke({"genfun", "--basin", "split", "-n", "1", "--format", "dot"}).code == kExitUsage);
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("library failures exit 1") {
  Result r = invoke({"enumerate", "--case", "ramified", "--p", "3", "-n", "2", "--max-contribution", "6",
                     "--precision", "5"});
  CHECK(r.code == kExitFailure);
  CHECK(r.err.find("PrecisionTooSmall") != std::string::npos);
}

TEST_CASE("binary exit codes") {
  CHECK(binary_exit("zeta --case ramified -n 2") == 0);
  CHECK(binary_exit("zeta --case nowhere -n 2") == 2);
  CHECK(binary_exit("enumerate --case ramified --p 3 -n 2 --max-contribution 6 --precision 5") == 1);
  CHECK(binary_exit("verify --suite identities --max-n 3") == 0);
}
