#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "dedesym/cli.hpp"
#include "dedesym/field.hpp"

using namespace dedesym;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("sum") {
  CHECK(run({"sum", "1", "3"}).out == "1/18\n");
  CHECK(run({"sum", "1", "3", "--naive"}).out == "1/18\n");
  CHECK(run({"sum", "-1", "3"}).out == "-1/18\n");
  CHECK(run({"sum", "2", "5", "--fast"}).out == "0\n");
  CHECK(run({"sum", "2", "4"}).code == kExitUsage);
  CHECK(run({"sum", "x", "4"}).code == kExitUsage);
  CHECK(run({"sum", "1", "3", "--naive", "--fast"}).code == kExitUsage);
}

TEST_CASE("json wrapping") {
  const auto j = nlohmann::json::parse(run({"--json", "sum", "1", "3"}).out);
  CHECK(j["exact"] == "1/18");
  CHECK(j["float"].get<double>() == doctest::Approx(1.0 / 18));
  CHECK(j["q"] == 3);
  CHECK(j["algorithm"] == "fast");
  const auto s = nlohmann::json::parse(run({"--json", "symbol", "--q", "5", "--word", "i,t,i,t^-2,i"}).out);
  CHECK(s["q"] == 5);
  CHECK(s["algorithms_agree"] == true);
}

TEST_CASE("phi and omega") {
  CHECK(run({"phi", "0", "-1", "1", "0"}).out == "0\n");
  CHECK(run({"phi", "1", "1", "0", "1"}).out == "1/12\n");
  CHECK(run({"phi", "1", "1", "1", "1"}).code == kExitUsage);
  CHECK(run({"phi", "1", "1", "1"}).code == kExitUsage);
  CHECK(run({"omega", "--q", "3", "--g", "0,-1,1,0", "--h", "0,-1,1,0"}).out == "0\n");
  CHECK(run({"omega", "--g", "-1,0,0,-1", "--h", "-1,0,0,-1"}).out == "1\n");
  CHECK(run({"omega", "--q", "5", "--g", "1,L,0,1", "--h", "0,-1,1,0"}).out == "0\n");
}

TEST_CASE("symbol") {
  const Run r = run({"symbol", "--q", "3", "--row", "3;1", "--algorithm", "both"});
  CHECK(r.code == kExitOk);
  CHECK(first_line(r.out) == "1/18");
  CHECK(r.out.find("algorithms_agree: true") != std::string::npos);
  CHECK(first_line(run({"symbol", "--q", "3", "--word", "i,t^-3,i^-1", "--algorithm", "a"}).out) == "1/18");
  CHECK(first_line(run({"symbol", "--q", "3", "--row", "3;1", "--algorithm", "b"}).out) == "1/18");
  CHECK(run({"symbol", "--q", "3"}).code == kExitUsage);
  CHECK(run({"symbol", "--q", "3", "--word", "t^2"}).code == kExitUsage);
  CHECK(run({"symbol", "--q", "5", "--row", "3;1"}).code == kExitUsage);
}

TEST_CASE("printed symbols re-parse to the same value") {
  for (const char* w : {"i,t,i,t^-2,i", "i,t^2,i,t^-1,i,t^3,i", "t,i,t^-1,i,t^2,i,t"}) {
    for (int q : {4, 5, 7, 9}) {
      const Run r = run({"symbol", "--q", std::to_string(q), "--word", w, "--algorithm", "a"});
      REQUIRE(r.code == kExitOk);
      const FieldElement x = FieldElement::parse(Field::of(q), first_line(r.out));
      CHECK(x.to_string() == first_line(r.out));
      const auto j = nlohmann::json::parse(run({"--json", "symbol", "--q", std::to_string(q), "--word", w}).out);
      CHECK(FieldElement::parse(Field::of(q), j["exact"].get<std::string>()) == x);
    }
  }
}

TEST_CASE("usage errors carry a position") {
  const Run r = run({"symbol", "--q", "3", "--word", "i,t^x"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("position 4") != std::string::npos);
  const Run m = run({"omega", "--g", "0,-1,1,0", "--h", "1,2*,0,1"});
  CHECK(m.code == kExitUsage);
  CHECK(m.err.find("position 4") != std::string::npos);
  CHECK(run({"member", "--q", "5", "--matrix", "1,2,3"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--bits", "20", "sum", "1", "3"}).code == kExitUsage);
}

TEST_CASE("member and reduce") {
  const Run yes = run({"member", "--q", "5", "--matrix", "1,L,0,1"});
  CHECK(yes.code == kExitOk);
  CHECK(yes.out == "member: true\nword: t\n");
  const Run no = run({"member", "--q", "3", "--matrix", "1,1/2,0,1"});
  CHECK(no.code == kExitCheckFailed);
  CHECK(no.out == "member: false\n");
  const Run red = run({"reduce", "--q", "3", "--row", "3;1"});
  CHECK(red.out == "start: 3;1\nswap: 3;1 -> 1;-3\ntranslate 3: 1;-3 -> 1;0\nterminal: 1;0\nswaps: 1\n");
  const auto j = nlohmann::json::parse(run({"--json", "reduce", "--q", "5", "--word", "i,t,i"}).out);
  CHECK(j["steps"].size() <= 4);
}

TEST_CASE("equidist") {
  const Run r = run({"equidist", "--q", "3", "--xmax", "10", "--checkpoints", "5,10"});
  CHECK(r.code == kExitOk);
  CHECK(first_line(r.out) == "q=3 X=10 entries=32 complete=true");
  const auto j = nlohmann::json::parse(run({"--json", "equidist", "--q", "3", "--xmax", "300", "--n", "0,1"}).out);
  CHECK(j["weyl"][0]["values"].back()["abs"].get<double>() == doctest::Approx(j["entries"].get<double>()));
  CHECK(run({"equidist", "--q", "3", "--xmax", "300", "--strict"}).code == kExitOk);
  // too few points for the discrepancy threshold
  CHECK(run({"equidist", "--q", "3", "--xmax", "20", "--strict"}).code == kExitCheckFailed);
  CHECK(run({"equidist", "--q", "3", "--xmax", "20", "--n", "1,x"}).code == kExitUsage);
}

TEST_CASE("check") {
  CHECK(run({"check", "--suite", "nope"}).code == kExitUsage);
  const Run r = run({"check", "--suite", "cocycle"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("[PASS]  4") != std::string::npos);
  CHECK(r.out.find("[PASS]  6") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
