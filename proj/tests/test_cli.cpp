#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "morsecell/cli.hpp"
#include "morsecell/io.hpp"

using namespace morsecell;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "morsecell");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("morsecell_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("check exits 1 on a refuted predicate") {
  const auto c4 = temp_file("c4.json", R"({"vars": ["x1","x2","x3","x4"],
    "gens": [[1,1,0,0],[0,1,1,0],[0,0,1,1],[1,0,0,1]]})");
  const auto r = run({"check", "bridge-friendly", "-i", c4, "--order", "x1*x4,x1*x2,x2*x3,x3*x4"});
  CHECK(r.code == kExitFalse);
  CHECK(r.json()["bridge_friendly"] == false);
  const auto lemma = run({"check", "bridge-friendly", "-i", c4, "--order", "x1*x4,x1*x2,x2*x3,x3*x4", "--algorithm", "lemma"});
  CHECK(lemma.code == kExitFalse);

  const auto lyu = run({"check", "lyubeznik", "-i", c4, "--order", "x1*x4,x1*x2,x2*x3,x3*x4"});
  CHECK(lyu.code == kExitFalse);
  CHECK(lyu.json()["witness"]["bridge"] == "x1*x4");
}

TEST_CASE("check accepts graphs and edge lists") {
  const auto edges = temp_file("tri.txt", "a b\nb c\nc a\n");
  const auto r = run({"check", "bm", "-i", edges, "--order", "a*b,b*c,a*c"});
  CHECK(r.code == kExitTrue);
  CHECK(r.json()["minimal"] == true);
  CHECK(run({"check", "bridge-friendly", "-g", "joined_six_cycles", "--order", "v*y,u*x,x*z,t*w,y*z,w*z,s*t,s*v,s*u"}).code ==
        kExitTrue);
}

TEST_CASE("graph commands") {
  const auto r = run({"graph", "recognize", "--labc", "-g", "diamond"});
  CHECK(r.code == kExitTrue);
  CHECK(r.json() == Json::parse(R"({"a":0,"b":0,"c":2})"));
  const auto none = run({"graph", "recognize", "--labc", "-g", "P5"});
  CHECK(none.code == kExitFalse);
  CHECK(none.json().is_null());
  CHECK(run({"graph", "recognize", "--bf", "-g", "net"}).code == kExitFalse);

  const auto built = run({"graph", "build", "C5"});
  CHECK(built.code == kExitTrue);
  CHECK(built.json()["edges"].size() == 5);
  const auto tree = temp_file("tree.json", R"({"vertices": ["a","b"], "edges": [["a","b"]], "weights": [[["a","b"], 2]]})");
  CHECK(run({"graph", "build", "--bf", tree}).json()["vertices"].size() == 4);
  CHECK(run({"graph", "enumerate", "-n", "4"}).json().size() == 6);
  CHECK(run({"graph", "edge-ideal", "-g", "C3"}).json()["gens"].size() == 3);
}

TEST_CASE("ideal commands") {
  CHECK(run({"ideal", "power", "-g", "C3", "-n", "2"}).json()["gens"].size() == 6);
  CHECK(run({"ideal", "hhz", "-g", "C4", "-m", "x1*x2*x3"}).json()["gens"].size() == 2);
  CHECK(run({"ideal", "scale", "-g", "P3", "-m", "x2"}).json()["gens"][0] == Json::parse("[1,2,0]"));
  const auto betti = run({"ideal", "betti", "-g", "C4", "--field", "gf2"});
  CHECK(betti.code == kExitTrue);
  CHECK(betti.json()["betti"].size() == 10);
}

TEST_CASE("search commands") {
  const auto found = run({"search", "bridge-friendly", "-g", "C5"});
  CHECK(found.code == kExitTrue);
  CHECK(found.json()["result"] == "witness_found");
  const auto none = run({"search", "lyubeznik", "-g", "C4", "--symmetry", "on", "--jobs", "2"});
  CHECK(none.code == kExitFalse);
  CHECK(none.json()["result"] == "exhausted_negative");
  const auto budget = run({"search", "bridge-friendly", "-g", "C7", "--budget", "10"});
  CHECK(budget.code == kExitBudget);
  CHECK(budget.json()["stats"]["examined"] == 10);
}

TEST_CASE("verify commands") {
  const auto r = run({"verify", "example-2.2"});
  CHECK(r.code == kExitTrue);
  const auto j = r.json();
  CHECK(j["passed"] == true);
  for (const auto& step : j["suites"][0]["steps"]) CHECK(step.contains("source"));
  CHECK(run({"verify", "all", "--class", "seconds"}).code == kExitTrue);
  CHECK(run({"verify", "remark-9cycle"}).code == kExitUsage);
  CHECK(run({"verify", "no-such-suite"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"ideal", "betti", "--field", "gf3", "-g", "C4"}).code == kExitUsage);
  CHECK(run({"ideal", "betti", "-i", "/nonexistent/file.json"}).code == kExitUsage);
  CHECK(run({"check", "lyubeznik", "-g", "C4", "--order", "x1*x2"}).code == kExitUsage);
  CHECK(run({"graph", "enumerate", "-n", "9"}).code == kExitUsage);
  const auto bad = temp_file("bad.json", "{not json");
  CHECK(run({"ideal", "betti", "-i", bad}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitTrue);
}
