// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "morsecell/graph.hpp"
#include "morsecell/suites.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace morsecell;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

unsigned worker_count() { return std::max(1U, std::thread::hardware_concurrency()); }

Outcome suite(const std::string& id, bool extended, double limit_seconds) {
  const SuiteReport report = run_suite(id, SuiteOptions{worker_count(), extended});
  std::size_t ok = 0;
  std::string failed;
  for (const auto& step : report.steps) {
    if (step.passed) {
      ++ok;
    } else if (failed.empty()) {
      failed = "; first failure: " + step.claim + " expected " + step.expected + " observed " + step.observed;
    }
  }
  std::ostringstream d;
  d << id << " " << ok << "/" << report.steps.size() << " steps" << failed;
  if (report.elapsed_seconds > limit_seconds) d << "; over the " << limit_seconds << " s limit";
  return {report.passed() && !report.steps.empty() && report.elapsed_seconds <= limit_seconds, d.str()};
}

Outcome properties() {
  const auto report = proptest::run_properties(1200, 0x6d6f727365);
  std::ostringstream d;
  d << report.pairs << " pairs, " << report.tallies.size() << " properties";
  std::uint64_t violations = 0;
  for (const auto& t : report.tallies) {
    violations += t.violations;
    if (t.violations) d << "; " << t.name << " violated " << t.violations << "x, e.g. " << t.first_counterexample;
  }
  d << ", " << violations << " violations";
  if (report.lyubeznik_criterion_findings) {
    d << ", " << report.lyubeznik_criterion_findings << " bridge-free/rank disagreements reported";
  }
  return {report.clean() && report.pairs >= 1000, d.str()};
}

Outcome graph_classification() {
  const std::vector<std::size_t> counts{1, 1, 2, 6, 21, 112, 853};
  std::size_t graphs = 0;
  std::size_t chordal = 0;
  std::size_t mismatches = 0;
  std::string first;
  auto miss = [&](const Graph& g, const std::string& what) {
    if (mismatches++ == 0) {
      std::ostringstream s;
      s << what << " on n=" << g.num_vertices() << " edges";
      for (auto [u, v] : g.edges()) s << " " << g.label(u) << "-" << g.label(v);
      first = s.str();
    }
  };
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto all = enumerate_connected(n);
    if (all.size() != counts[n - 1]) miss(all.front(), "class count");
    for (const auto& g : all) {
      ++graphs;
      const auto adj = oracle::adjacency_of(g);
      if (g.num_edges() > 0) {
        const auto labc = recognize_labc(g);
        if (labc.has_value() != oracle::avoids_labc_forbidden(adj)) miss(g, "L(a,b,c) recognition vs forbidden list");
        if (labc && !are_isomorphic(build_labc(labc->a, labc->b, labc->c), g)) miss(g, "L(a,b,c) round trip");
      }
      const bool is_ch = oracle::chordal(adj);
      if (is_ch != is_chordal(g)) miss(g, "chordality");
      if (!is_ch) continue;
      ++chordal;
      const auto bf = recognize_bf(g);
      if (bf.has_value() != oracle::avoids_bf_forbidden(adj)) miss(g, "BF recognition vs forbidden list");
      if (bf.has_value() != oracle::triangle_degree_two(adj)) miss(g, "BF recognition vs triangle apex degree");
      if (bf && !are_isomorphic(build_bf(*bf), g)) miss(g, "BF round trip");
    }
  }
  std::ostringstream d;
  d << graphs << " connected graphs, " << chordal << " chordal, " << mismatches << " mismatches";
  if (!first.empty()) d << "; first: " << first;
  return {mismatches == 0, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"square edge ideal: critical sets and subset types", 1, [] { return suite("example-2.2", false, 1); }},
      {"nine forbidden graphs have no Lyubeznik order", 30, [] { return suite("prop-3.1", false, 30); }},
      {"L(a,b,c) orders give minimal Lyubeznik resolutions", 10, [] { return suite("thm-3.5", false, 10); }},
      {"squares of edge ideals and powers of (x,y)", 120, [] { return suite("thm-3.8", false, 120); }},
      {"bridge-friendly cycles up to n = 9", 1800, [] { return suite("prop-4.2", true, 1800); }},
      {"K4, gem, kite, net are not bridge-friendly", 120, [] { return suite("prop-4.3", false, 120); }},
      {"BF(T,w) orders are bridge-friendly", 120, [] { return suite("thm-4.8", false, 120); }},
      {"restrictions of squares and K1,3 power are not bridge-friendly", 1200,
       [] { return suite("prop-4.9", false, 1200); }},
      {"triangle powers: orders and feasible minima", 60, [] { return suite("prop-4.10", false, 60); }},
      {"nine-cycle has no minimal Barile-Macchia order", 2700, [] { return suite("remark-9cycle", true, 2700); }},
      {"joined six-cycles order is bridge-friendly", 1, [] { return suite("example-joined-6-cycles", false, 1); }},
      {"no restriction of the cubed star matches f times its square", 60,
       [] { return suite("remark-2.12", false, 60); }},
      {"randomized invariants, zero violations", 300, properties},
      {"graph classification on connected graphs up to 7 vertices", 600, graph_classification},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out = criteria[k].run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > criteria[k].limit_seconds) out.passed = false;
    failures += out.passed ? 0 : 1;
    std::printf("[%2zu] %-64s %s (%.2f s, limit %.0f s) %s\n", k + 1, criteria[k].name, out.passed ? "PASS" : "FAIL",
                secs, criteria[k].limit_seconds, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
