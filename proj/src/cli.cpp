#include "morsecell/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "morsecell/error.hpp"
#include "morsecell/io.hpp"
#include "morsecell/suites.hpp"

namespace morsecell {

namespace {

struct IdealSource {
  std::string file;
  std::string graph;

  void attach(CLI::App* app) {
    app->add_option("-i,--input", file, "ideal JSON, graph JSON or edge-list file");
    app->add_option("-g,--graph", graph, "named graph, e.g. C4, K1,3, diamond, labc:1,1,1");
  }

  NamedIdeal load() const {
    if (!file.empty() && !graph.empty()) throw InvalidArgument("give either --input or --graph, not both");
    if (!file.empty()) return load_ideal(file);
    if (!graph.empty()) return named_edge_ideal(build_from_name(graph));
    throw InvalidArgument("an ideal is required (--input FILE or --graph NAME)");
  }

  Graph load_graph_only() const {
    if (!file.empty() && !graph.empty()) throw InvalidArgument("give either --input or --graph, not both");
    if (!file.empty()) return morsecell::load_graph(file);
    if (!graph.empty()) return build_from_name(graph);
    throw InvalidArgument("a graph is required (--input FILE or --graph NAME)");
  }
};

unsigned default_jobs() {
  if (const char* env = std::getenv("MORSECELL_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("MORSECELL_JOBS must be an integer in 1..1024, got '") + env + "'");
  }
  return 1;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int exit_for(SearchResult r) {
  switch (r) {
    case SearchResult::witness_found:
      return kExitTrue;
    case SearchResult::exhausted_negative:
      return kExitFalse;
    case SearchResult::budget_exceeded:
      return kExitBudget;
  }
  return kExitUsage;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimality of Lyubeznik and Barile-Macchia resolutions of monomial ideals", "morsecell"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --field follow the subcommand
  std::string field = "gf2";
  app.add_option("--field", field, "coefficient field (only gf2)")->check(CLI::IsMember({"gf2"}));

  // ideal
  auto* ideal_cmd = app.add_subcommand("ideal", "operations on monomial ideals");
  ideal_cmd->require_subcommand(1);
  IdealSource ideal_src;
  unsigned power_n = 0;
  std::string monomial_arg;
  auto* ideal_power = ideal_cmd->add_subcommand("power", "I^n");
  ideal_src.attach(ideal_power);
  ideal_power->add_option("-n,--exponent", power_n, "n >= 1")->required();
  auto* ideal_hhz = ideal_cmd->add_subcommand("hhz", "I^{<=m}");
  ideal_src.attach(ideal_hhz);
  ideal_hhz->add_option("-m,--monomial", monomial_arg, "bound monomial, e.g. x1^2*x3")->required();
  auto* ideal_scale = ideal_cmd->add_subcommand("scale", "m I");
  ideal_src.attach(ideal_scale);
  ideal_scale->add_option("-m,--monomial", monomial_arg, "scaling monomial")->required();
  auto* ideal_betti = ideal_cmd->add_subcommand("betti", "multigraded Betti numbers of S/I over GF(2)");
  ideal_src.attach(ideal_betti);

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "graphs and edge ideals");
  graph_cmd->require_subcommand(1);
  IdealSource graph_src;
  std::string graph_name;
  std::string tree_file;
  auto* graph_build = graph_cmd->add_subcommand("build", "build a named graph or BF(T,w)");
  graph_build->add_option("name", graph_name, "graph name, e.g. C5, labc:2,1,0, joined_six_cycles");
  graph_build->add_option("--bf", tree_file, "tree+weights JSON; builds BF(T,w)");
  auto* graph_edge = graph_cmd->add_subcommand("edge-ideal", "edge ideal of a graph");
  graph_src.attach(graph_edge);
  auto* graph_recognize = graph_cmd->add_subcommand("recognize", "recognize L(a,b,c) or BF(T,w)");
  graph_src.attach(graph_recognize);
  bool want_labc = false;
  bool want_bf = false;
  graph_recognize->add_flag("--labc", want_labc, "recognize L(a,b,c)");
  graph_recognize->add_flag("--bf", want_bf, "recognize BF(T,w)");
  std::size_t enum_n = 0;
  auto* graph_enumerate = graph_cmd->add_subcommand("enumerate", "connected graphs up to isomorphism");
  graph_enumerate->add_option("-n,--vertices", enum_n, "number of vertices (1..7)")->required();

  // check
  auto* check_cmd = app.add_subcommand("check", "test a single total order");
  check_cmd->require_subcommand(1);
  IdealSource check_src;
  std::string order_text;
  std::string algorithm = "definitional";
  auto* check_lyu = check_cmd->add_subcommand("lyubeznik", "is the Lyubeznik resolution minimal");
  auto* check_bm = check_cmd->add_subcommand("bm", "is the Barile-Macchia resolution minimal");
  auto* check_bf = check_cmd->add_subcommand("bridge-friendly", "is the order bridge-friendly");
  for (auto* sub : {check_lyu, check_bm, check_bf}) {
    check_src.attach(sub);
    sub->add_option("--order", order_text, "generators, largest first, comma separated")->required();
  }
  check_bf->add_option("--algorithm", algorithm, "definitional or lemma")
      ->check(CLI::IsMember({"definitional", "lemma"}));

  // search
  auto* search_cmd = app.add_subcommand("search", "search all total orders");
  search_cmd->require_subcommand(1);
  IdealSource search_src;
  std::uint64_t budget = 0;
  std::string symmetry = "off";
  unsigned jobs = 0;
  auto* search_lyu = search_cmd->add_subcommand("lyubeznik", "an order with a minimal Lyubeznik resolution");
  auto* search_bf = search_cmd->add_subcommand("bridge-friendly", "a bridge-friendly order");
  for (auto* sub : {search_lyu, search_bf}) {
    search_src.attach(sub);
    sub->add_option("--budget", budget, "maximum number of orders to evaluate");
    sub->add_option("--symmetry", symmetry, "skip orders equivalent under variable symmetries")
        ->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--jobs", jobs, "worker threads (default: MORSECELL_JOBS or 1)");
  }

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite_id;
  std::string class_text;
  verify_cmd->add_option("suite", suite_id, "suite id or 'all'")->required();
  verify_cmd->add_option("--class", class_text, "largest runtime class to run: seconds, minutes or extended")
      ->check(CLI::IsMember({"seconds", "minutes", "extended"}));
  verify_cmd->add_option("--jobs", jobs, "worker threads for searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitTrue;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (ideal_cmd->parsed()) {
      const NamedIdeal in = ideal_src.load();
      if (ideal_betti->parsed()) {
        const BettiTable t = betti_table(in.ideal);
        emit(out, Json{{"vars", in.vars}, {"field", field}, {"betti", graded_to_json(t.counts)}});
        std::string totals;
        for (auto v : totals_by_degree(t.counts)) totals += (totals.empty() ? "" : " ") + std::to_string(v);
        err << "total Betti numbers: " << totals << '\n';
        return kExitTrue;
      }
      NamedIdeal result = in;
      if (ideal_power->parsed()) result.ideal = power(in.ideal, power_n);
      if (ideal_hhz->parsed()) result.ideal = hhz_subideal(in.ideal, parse_monomial(monomial_arg, in.vars));
      if (ideal_scale->parsed()) result.ideal = scale(parse_monomial(monomial_arg, in.vars), in.ideal);
      emit(out, ideal_to_json(result));
      err << result.ideal.size() << " minimal generators\n";
      return kExitTrue;
    }

    if (graph_cmd->parsed()) {
      if (graph_build->parsed()) {
        if (graph_name.empty() == tree_file.empty()) throw InvalidArgument("give a graph name or --bf FILE");
        const Graph g = tree_file.empty() ? build_from_name(graph_name)
                                          : build_bf(tree_from_json(parse_json(read_file(tree_file))));
        emit(out, graph_to_json(g));
        err << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
        return kExitTrue;
      }
      if (graph_edge->parsed()) {
        emit(out, ideal_to_json(named_edge_ideal(graph_src.load_graph_only())));
        return kExitTrue;
      }
      if (graph_recognize->parsed()) {
        if (want_labc == want_bf) throw InvalidArgument("give exactly one of --labc, --bf");
        const Graph g = graph_src.load_graph_only();
        if (want_labc) {
          const auto p = recognize_labc(g);
          emit(out, p ? Json{{"a", p->a}, {"b", p->b}, {"c", p->c}} : Json(nullptr));
          err << (p ? "graph is L(" + std::to_string(p->a) + "," + std::to_string(p->b) + "," + std::to_string(p->c) + ")"
                    : std::string("graph is not of the form L(a,b,c)"))
              << '\n';
          return p ? kExitTrue : kExitFalse;
        }
        const auto tw = recognize_bf(g);
        emit(out, tw ? tree_to_json(*tw) : Json(nullptr));
        err << (tw ? "graph is BF(T,w)" : "graph is not of the form BF(T,w)") << '\n';
        return tw ? kExitTrue : kExitFalse;
      }
      if (graph_enumerate->parsed()) {
        Json list = Json::array();
        for (const auto& g : enumerate_connected(enum_n)) list.push_back(graph_to_json(g));
        err << list.size() << " connected graphs on " << enum_n << " vertices\n";
        emit(out, list);
        return kExitTrue;
      }
    }

    if (check_cmd->parsed()) {
      const NamedIdeal in = check_src.load();
      const TotalOrder ord = parse_order(order_text, in);
      Json report{{"order", order_to_json(ord, in)}};
      bool verdict = false;
      if (check_lyu->parsed()) {
        const LyubeznikVerdict v = lyubeznik_minimal(in.ideal, ord);
        verdict = v.minimal;
        report["check"] = "lyubeznik";
        report["minimal"] = v.minimal;
        if (v.witness_set) {
          report["witness"] = {{"subset", subset_to_json(*v.witness_set, in)},
                               {"bridge", monomial_text(in.ideal.gen(*v.witness_bridge), in.vars)}};
        }
        report["cells"] = graded_to_json(critical_cells(in.ideal, ord, Family::lyubeznik).counts);
      } else if (check_bm->parsed()) {
        const CellTable cells = critical_cells(in.ideal, ord, Family::barile_macchia);
        const BettiTable betti = betti_table(in.ideal);
        const MinimalityVerdict v = minimality_verdict(cells, betti);
        verdict = v.minimal;
        report["check"] = "bm";
        report["minimal"] = v.minimal;
        report["cells"] = graded_to_json(cells.counts);
        report["betti"] = graded_to_json(betti.counts);
        if (v.discrepancy) {
          report["discrepancy"] = {
              {"i", v.discrepancy->i},
              {"degree", std::vector<int>(v.discrepancy->degree.exponents().begin(),
                                          v.discrepancy->degree.exponents().end())},
              {"cells", v.cells_value},
              {"betti", v.betti_value}};
        }
      } else {
        const auto alg = algorithm == "lemma" ? BridgeFriendlyAlgorithm::lemma : BridgeFriendlyAlgorithm::definitional;
        verdict = is_bridge_friendly(in.ideal, ord, alg);
        report["check"] = "bridge-friendly";
        report["algorithm"] = algorithm;
        report["bridge_friendly"] = verdict;
      }
      emit(out, report);
      err << report["check"].get<std::string>() << ": " << (verdict ? "true" : "false") << '\n';
      return verdict ? kExitTrue : kExitFalse;
    }

    if (search_cmd->parsed()) {
      const NamedIdeal in = search_src.load();
      SearchOptions options;
      if (budget > 0) options.budget = budget;
      options.use_symmetry = symmetry == "on";
      options.jobs = jobs > 0 ? jobs : default_jobs();
      const SearchOutcome o =
          search_lyu->parsed() ? exists_lyubeznik_order(in.ideal, options) : exists_bf_order(in.ideal, options);
      Json report = outcome_to_json(o, in);
      report["predicate"] = search_lyu->parsed() ? "lyubeznik" : "bridge-friendly";
      report["symmetry"] = options.use_symmetry;
      emit(out, report);
      err << to_string(o.result) << " after " << o.stats.examined << " orders (" << o.stats.pruned
          << " skipped by symmetry)\n";
      return exit_for(o.result);
    }

    if (verify_cmd->parsed()) {
      SuiteOptions options;
      options.jobs = jobs > 0 ? jobs : default_jobs();
      const auto chosen = class_text.empty() ? std::nullopt : parse_runtime_class(class_text);
      options.extended = chosen == RuntimeClass::extended;
      std::vector<std::string> ids;
      if (suite_id == "all") {
        const RuntimeClass limit = chosen.value_or(RuntimeClass::minutes);
        for (const auto& info : suite_catalog()) {
          if (info.runtime_class <= limit) ids.push_back(info.id);
        }
      } else {
        const auto& catalog = suite_catalog();
        const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const SuiteInfo& s) { return s.id == suite_id; });
        if (it == catalog.end()) throw InvalidArgument("unknown suite id '" + suite_id + "'");
        if (it->runtime_class == RuntimeClass::extended && !options.extended) {
          throw InvalidArgument("suite '" + suite_id + "' is extended; rerun with --class extended");
        }
        ids.push_back(suite_id);
      }
      Json suites = Json::array();
      bool all_passed = true;
      for (const auto& id : ids) {
        const SuiteReport r = run_suite(id, options);
        all_passed = all_passed && r.passed();
        suites.push_back(suite_report_to_json(r));
        std::size_t ok = 0;
        for (const auto& s : r.steps) ok += s.passed ? 1 : 0;
        err << (r.passed() ? "PASS " : "FAIL ") << id << "  " << ok << "/" << r.steps.size() << " steps, "
            << r.elapsed_seconds << " s\n";
        for (const auto& s : r.steps) {
          if (!s.passed) err << "    failed: " << s.claim << ": expected " << s.expected << ", got " << s.observed << '\n';
        }
      }
      emit(out, Json{{"passed", all_passed}, {"suites", suites}});
      return all_passed ? kExitTrue : kExitFalse;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitUsage;
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace morsecell
