#include "morsecell/suites.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "morsecell/error.hpp"

namespace morsecell {

namespace {

using P = Provenance;

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string totals_text(const GradedCounts& counts) {
  std::vector<std::string> parts;
  for (auto v : totals_by_degree(counts)) parts.push_back(std::to_string(v));
  return "(" + join(parts) + ")";
}

std::string subset_text(GenMask mask, const NamedIdeal& named) {
  std::vector<std::string> parts;
  for (auto g : mask_members(mask)) parts.push_back(monomial_text(named.ideal.gen(g), named.vars));
  return "{" + join(parts) + "}";
}

std::string set_text(const std::set<Monomial>& ms, const std::vector<std::string>& vars) {
  std::vector<std::string> parts;
  for (const auto& m : ms) parts.push_back(to_string(m, vars));
  std::sort(parts.begin(), parts.end());
  return "{" + join(parts) + "}";
}

GenMask mask_of(const NamedIdeal& named, const std::vector<std::string>& gens) {
  GenMask mask = 0;
  for (const auto& text : gens) {
    const auto idx = named.ideal.index_of(parse_monomial(text, named.vars));
    if (!idx) throw InvalidArgument(text + " is not a minimal generator");
    mask |= bit(*idx);
  }
  return mask;
}

NamedIdeal named(MonomialIdeal ideal, std::vector<std::string> vars = {}) {
  if (vars.empty()) vars = default_var_names(ideal.num_vars());
  return NamedIdeal{std::move(ideal), std::move(vars)};
}

MonomialIdeal ideal_of(const std::vector<std::vector<int>>& rows) {
  std::vector<Monomial> gens;
  for (const auto& r : rows) gens.emplace_back(std::span<const int>(r));
  return MonomialIdeal::minimalize(std::move(gens));
}

Monomial mono(std::vector<int> e) { return Monomial(std::span<const int>(e)); }

MonomialIdeal graph_ideal(const std::string& name) { return edge_ideal(build_from_name(name)); }

class Recorder {
 public:
  Recorder(SuiteReport& report, const SuiteOptions& options) : report_(report), options_(options) {}

  void check(const std::string& claim, const std::string& expected, const std::string& observed, P source) {
    report_.steps.push_back(SuiteStep{claim, expected, observed, source, expected == observed});
  }

  void check(const std::string& claim, bool expected, bool observed, P source) {
    check(claim, yes_no(expected), yes_no(observed), source);
  }

  SearchOptions search_options() const {
    SearchOptions o;
    o.jobs = options_.jobs;
    return o;
  }

  void search(const std::string& claim, const MonomialIdeal& ideal, bool bridge_friendly, SearchResult expected,
              P source) {
    const SearchOutcome outcome =
        bridge_friendly ? exists_bf_order(ideal, search_options()) : exists_lyubeznik_order(ideal, search_options());
    std::string observed = to_string(outcome.result);
    if (outcome.witness) {
      const bool ok = bridge_friendly ? is_bridge_friendly(ideal, *outcome.witness)
                                      : lyubeznik_minimal(ideal, *outcome.witness).minimal;
      if (!ok) observed += " (witness fails re-check)";
    }
    check(claim, to_string(expected), observed, source);
  }

  bool extended() const { return options_.extended; }
  unsigned jobs() const { return options_.jobs; }

 private:
  SuiteReport& report_;
  const SuiteOptions& options_;
};

void suite_example_2_2(Recorder& r) {
  const Graph c4({"w", "x", "y", "z"}, {{"w", "x"}, {"x", "y"}, {"y", "z"}, {"z", "w"}});
  const NamedIdeal n = named_edge_ideal(c4);
  const MonomialIdeal& I = n.ideal;
  const TotalOrder ord = parse_order("w*x,x*y,y*z,w*z", n);
  const GenMask s1 = mask_of(n, {"w*x", "x*y", "y*z"});
  const GenMask s2 = mask_of(n, {"w*x", "x*y", "w*z"});
  const GenMask s3 = I.all();

  r.check("sigma1 = {wx,xy,yz} is Lyubeznik-critical", false, is_lyubeznik_critical(I, ord, s1), P::published);
  r.check("sigma2 = {wx,xy,wz} is Lyubeznik-critical", true, is_lyubeznik_critical(I, ord, s2), P::published);
  const SubsetAnalysis a1 = analyze_subset(I, ord, s1);
  r.check("bridges of sigma1", subset_text(mask_of(n, {"x*y"}), n), subset_text(a1.bridges, n), P::published);
  r.check("true gaps of sigma1", subset_text(mask_of(n, {"w*z"}), n), subset_text(a1.true_gaps, n), P::published);
  const SubsetAnalysis a2 = analyze_subset(I, ord, s2);
  r.check("bridges of sigma2", subset_text(mask_of(n, {"w*x"}), n), subset_text(a2.bridges, n), P::published);
  r.check("gaps of sigma2", subset_text(mask_of(n, {"y*z"}), n), subset_text(a2.gaps, n), P::published);
  r.check("true gaps of sigma2", "{}", subset_text(a2.true_gaps, n), P::published);
  const TypeVerdict t1 = subset_type(I, ord, s1);
  const TypeVerdict t2 = subset_type(I, ord, s2);
  const TypeVerdict t3 = subset_type(I, ord, s3);
  r.check("sigma1 is type-1", true, t1.type1, P::published);
  r.check("sigma2 is potentially-type-2", true, t2.ptype2, P::published);
  r.check("sigma2 is type-2", false, t2.type2, P::published);
  r.check("sigma3 = all generators is type-2", true, t3.type2, P::published);
  r.check("bridge-friendly (definitional)", false, is_bridge_friendly(I, ord), P::published);
  r.check("bridge-friendly (lemma search)", false, is_bridge_friendly(I, ord, BridgeFriendlyAlgorithm::lemma),
          P::published);
  const LyubeznikVerdict lv = lyubeznik_minimal(I, ord);
  std::string witness = "none";
  if (lv.witness_set) witness = subset_text(*lv.witness_set, n) + " bridge " + monomial_text(I.gen(*lv.witness_bridge), n.vars);
  r.check("Lyubeznik resolution minimal", false, lv.minimal, P::derived);
  r.check("first critical set with a bridge", "{w*x,w*z,x*y} bridge w*x", witness, P::derived);
  const CellTable lyu = critical_cells(I, ord, Family::lyubeznik);
  const CellTable bm = critical_cells(I, ord, Family::barile_macchia);
  const BettiTable betti = betti_table(I);
  r.check("Lyubeznik cell totals", "(1,4,5,2)", totals_text(lyu.counts), P::derived);
  r.check("Betti totals of S/I", "(1,4,4,1)", totals_text(betti.counts), P::derived);
  r.check("sigma1 and sigma3 are not Barile-Macchia-critical", "false,false",
          yes_no(t1.bm_critical) + "," + yes_no(t3.bm_critical), P::published);
  const MinimalityVerdict mv = minimality_verdict(lyu, betti);
  r.check("Lyubeznik cells vs Betti", "not minimal, first difference at i=2",
          mv.minimal ? "minimal" : "not minimal, first difference at i=" + std::to_string(mv.discrepancy->i),
          P::derived);
  r.check("Euler identity for Lyubeznik and Barile-Macchia cells", true,
          euler_check(lyu, betti) && euler_check(bm, betti), P::derived);
}

void suite_prop_3_1(Recorder& r) {
  for (const char* name : {"P5", "C4", "C5", "K4", "kite", "gem", "tadpole", "butterfly", "net"}) {
    r.search(std::string("no Lyubeznik order for I(") + name + ")", graph_ideal(name), false,
             SearchResult::exhausted_negative, P::published);
  }
}

void suite_thm_3_5(Recorder& r) {
  for (std::size_t a = 0; a <= 2; ++a) {
    for (std::size_t b = 0; b <= 2; ++b) {
      for (std::size_t c = 0; c <= 2; ++c) {
        const MonomialIdeal I = edge_ideal(build_labc(a, b, c));
        const std::string tag = "L(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        r.check("constructed order gives a minimal Lyubeznik resolution of I(" + tag + ")", true,
                lyubeznik_minimal(I, order_for_labc(a, b, c)).minimal, P::published);
      }
    }
  }
  const MonomialIdeal I = edge_ideal(build_labc(2, 2, 2));
  const SearchOutcome o = exists_lyubeznik_order(I, r.search_options());
  const std::uint64_t constructed = rank_permutation(order_for_labc(2, 2, 2).ranking());
  r.check("search over I(L(2,2,2)) finds an order no later than the constructed one", "witness_found, rank <= " +
              std::to_string(constructed),
          to_string(o.result) + (o.witness_rank && *o.witness_rank <= constructed
                                     ? ", rank <= " + std::to_string(constructed)
                                     : ", rank " + (o.witness_rank ? std::to_string(*o.witness_rank) : "none")),
          P::published);
}

// (x, y)^n: every order leaves a Lyubeznik-critical 3-subset.
bool admits_order_without_critical_triple(const MonomialIdeal& ideal, const SearchOptions& options) {
  const SearchOutcome o = search_orders(
      ideal,
      [](OrderClassifier& cls) {
        thread_local std::vector<std::uint8_t> critical;
        cls.lyubeznik_critical_flags(critical);
        for (std::size_t s = 0; s < critical.size(); ++s) {
          if (critical[s] && std::popcount(s) == 3) return false;
        }
        return true;
      },
      options);
  return o.result == SearchResult::witness_found;
}

void suite_thm_3_8(Recorder& r) {
  const MonomialIdeal c4h = ideal_of({{2, 2, 0, 0}, {0, 2, 2, 0}, {2, 1, 0, 1}, {1, 2, 1, 0}, {0, 1, 2, 1}, {1, 1, 1, 1}});
  r.check("I(C4)^2 restricted to (x1x2x3)^2x4 is the listed 6-generator ideal", true,
          hhz_subideal(power(graph_ideal("C4"), 2), mono({2, 2, 2, 1})) == c4h, P::published);
  r.search("no Lyubeznik order for I(K1,3)^2", power(graph_ideal("K1,3"), 2), false,
           SearchResult::exhausted_negative, P::published);
  r.search("no Lyubeznik order for I(P4)^2", power(graph_ideal("P4"), 2), false, SearchResult::exhausted_negative,
           P::published);
  r.search("no Lyubeznik order for I(C3)^2", power(graph_ideal("C3"), 2), false, SearchResult::exhausted_negative,
           P::published);
  r.search("no Lyubeznik order for the restriction of I(C4)^2", c4h, false, SearchResult::exhausted_negative,
           P::published);
  r.search("I(P3)^2 has a Lyubeznik order", power(graph_ideal("P3"), 2), false, SearchResult::witness_found,
           P::published);
  const MonomialIdeal xy = ideal_of({{1, 0}, {0, 1}});
  for (unsigned n = 3; n <= 5; ++n) {
    const MonomialIdeal p = power(xy, n);
    r.check("every order on (x,y)^" + std::to_string(n) + " has a Lyubeznik-critical 3-subset", false,
            admits_order_without_critical_triple(p, r.search_options()), P::published);
    r.check("Betti totals of S/(x,y)^" + std::to_string(n),
            "(1," + std::to_string(n + 1) + "," + std::to_string(n) + ")", totals_text(betti_table(p).counts),
            P::derived);
  }
}

void suite_prop_4_2(Recorder& r) {
  const std::size_t last = r.extended() ? 9 : 8;
  for (std::size_t n = 3; n <= last; ++n) {
    const bool positive = n == 3 || n == 5 || n == 6;
    r.search("bridge-friendly order for I(C" + std::to_string(n) + ")", graph_ideal("C" + std::to_string(n)), true,
             positive ? SearchResult::witness_found : SearchResult::exhausted_negative, P::published);
  }
}

void suite_prop_4_3(Recorder& r) {
  for (const char* name : {"K4", "gem", "kite", "net"}) {
    r.search(std::string("no bridge-friendly order for I(") + name + ")", graph_ideal(name), true,
             SearchResult::exhausted_negative, P::published);
  }
}

void suite_thm_4_8(Recorder& r) {
  const auto trees = sample_weighted_trees(20, 0x6d6f727365ULL);
  std::size_t index = 0;
  for (const auto& sample : trees) {
    ++index;
    const Graph g = build_bf(sample.tree);
    const MonomialIdeal I = edge_ideal(g);
    const TotalOrder ord = order_for_bf(sample.tree, sample.root);
    const std::string tag = "tree " + std::to_string(index) + " (" + std::to_string(sample.tree.tree.num_vertices()) +
                            " vertices, " + std::to_string(I.size()) + " edges in BF(T,w))";
    r.check(tag + ": constructed order is bridge-friendly", true, is_bridge_friendly(I, ord), P::published);
    r.check(tag + ": lemma search agrees", true, is_bridge_friendly(I, ord, BridgeFriendlyAlgorithm::lemma),
            P::derived);
    r.check(tag + ": recognized as BF(T,w)", true, recognize_bf(g).has_value(), P::derived);
  }
}

void suite_prop_4_9(Recorder& r) {
  const MonomialIdeal c4 = graph_ideal("C4");
  const MonomialIdeal paw = graph_ideal("paw");
  const MonomialIdeal diamond = graph_ideal("diamond");
  const MonomialIdeal k4 = graph_ideal("K4");
  const MonomialIdeal c4h = ideal_of({{2, 2, 0, 0}, {0, 2, 2, 0}, {2, 1, 0, 1}, {1, 2, 1, 0}, {0, 1, 2, 1}, {1, 1, 1, 1}});
  const MonomialIdeal pawh =
      ideal_of({{2, 0, 2, 0}, {0, 0, 2, 2}, {2, 1, 1, 0}, {1, 1, 2, 0}, {1, 0, 2, 1}, {0, 1, 2, 1}, {1, 1, 1, 1}});
  const MonomialIdeal diah = ideal_of({{0, 2, 0, 2}, {1, 2, 1, 0}, {1, 2, 0, 1}, {1, 1, 0, 2}, {1, 0, 1, 2},
                                       {0, 2, 1, 1}, {0, 1, 1, 2}, {1, 1, 1, 1}});
  const MonomialIdeal k13 = ideal_of({{4, 0, 0}, {3, 1, 0}, {3, 0, 1}, {2, 2, 0}, {2, 1, 1}, {2, 0, 2}, {1, 2, 1},
                                      {1, 1, 2}, {0, 2, 2}});
  const MonomialIdeal cube = ideal_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

  r.check("I(C4)^2 restricted to (x1x2x3)^2x4", true, hhz_subideal(power(c4, 2), mono({2, 2, 2, 1})) == c4h,
          P::published);
  r.check("I(paw)^2 restricted to (x1x3x4)^2x2", true, hhz_subideal(power(paw, 2), mono({2, 1, 2, 2})) == pawh,
          P::published);
  r.check("I(paw)^3 restricted to (x1x2x4)^3x3^2 is x1x2 I(paw)^2", true,
          hhz_subideal(power(paw, 3), mono({3, 3, 2, 3})) == scale(mono({1, 1, 0, 0}), power(paw, 2)),
          P::published);
  r.check("I(diamond)^2 restricted to (x2x4)^2x1x3", true,
          hhz_subideal(power(diamond, 2), mono({1, 2, 1, 2})) == diah, P::published);
  r.check("I(diamond)^3 restricted to (x2x4)^3x1x3 is x2x4 times the square's restriction", true,
          hhz_subideal(power(diamond, 3), mono({1, 3, 1, 3})) == scale(mono({0, 1, 0, 1}), diah), P::published);
  r.check("I(K4)^2 and I(diamond)^2 agree below (x2x4)^2x1x3", true,
          hhz_subideal(power(k4, 2), mono({1, 2, 1, 2})) == diah, P::published);
  r.check("I(K4)^3 restricted to (x2x4)^3x1x3 is x2x4 times the square's restriction", true,
          hhz_subideal(power(k4, 3), mono({1, 3, 1, 3})) == scale(mono({0, 1, 0, 1}), diah), P::published);
  r.check("(x1,x2,x3)^4 restricted to x1^4x2^2x3^2 is the listed 9-generator ideal", true,
          hhz_subideal(power(cube, 4), mono({4, 2, 2})) == k13, P::derived);
  r.search("no bridge-friendly order for the C4 restriction (6 generators)", c4h, true,
           SearchResult::exhausted_negative, P::published);
  r.search("no bridge-friendly order for the paw restriction (7 generators)", pawh, true,
           SearchResult::exhausted_negative, P::published);
  r.search("no bridge-friendly order for the diamond restriction (8 generators)", diah, true,
           SearchResult::exhausted_negative, P::published);
  r.search("no bridge-friendly order for the degree-4 K1,3 ideal (9 generators)", k13, true,
           SearchResult::exhausted_negative, P::published);
}

void suite_prop_4_10(Recorder& r) {
  const MonomialIdeal c3 = graph_ideal("C3");
  const NamedIdeal sq = named(power(c3, 2));
  const NamedIdeal cb = named(power(c3, 3));
  const NamedIdeal fourth = named(power(c3, 4));
  const auto& vars = sq.vars;

  const TotalOrder sq_order = parse_order("x2^2*x3^2,x1*x2^2*x3,x1^2*x2^2,x1*x2*x3^2,x1^2*x3^2,x1^2*x2*x3", sq);
  r.check("I(C3)^2 is bridge-friendly under the displayed order", true, is_bridge_friendly(sq.ideal, sq_order),
          P::published);
  r.check("lemma search agrees on I(C3)^2", true,
          is_bridge_friendly(sq.ideal, sq_order, BridgeFriendlyAlgorithm::lemma), P::derived);
  r.check("Barile-Macchia cells of I(C3)^2 equal its Betti numbers", true,
          minimality_verdict(critical_cells(sq.ideal, sq_order, Family::barile_macchia), betti_table(sq.ideal)).minimal,
          P::published);

  const std::string cube_head =
      "x1^3*x3^3,x2^3*x3^3,x1^3*x2^3,x1^2*x2*x3^3,x1*x2^3*x3^2,x1^2*x2^3*x3,x1^3*x2*x3^2,x1^3*x2^2*x3";
  const TotalOrder cube_literal = parse_order(cube_head + ",x1^2*x2^2*x3^2,x1*x2^2*x3^3", cb);
  const TotalOrder cube_order = parse_order(cube_head + ",x1*x2^2*x3^3,x1^2*x2^2*x3^2", cb);
  r.check("displayed I(C3)^3 order, taken literally, is bridge-friendly", false,
          is_bridge_friendly(cb.ideal, cube_literal), P::derived);
  r.check("I(C3)^3 is bridge-friendly once the last two generators are swapped", true,
          is_bridge_friendly(cb.ideal, cube_order), P::published);
  r.check("lemma search agrees on I(C3)^3", true,
          is_bridge_friendly(cb.ideal, cube_order, BridgeFriendlyAlgorithm::lemma), P::derived);

  const std::set<Monomial> sq_min = feasible_min_bf(sq.ideal, {}, true);
  r.check("minima of bridge-friendly orders of I(C3)^2 (all 720 orders)", "{x1*x2*x3^2,x1*x2^2*x3,x1^2*x2*x3}",
          set_text(sq_min, vars), P::published);

  const std::vector<std::pair<Monomial, Monomial>> cube_restrictions{
      {mono({2, 3, 3}), mono({0, 1, 1})}, {mono({3, 2, 3}), mono({1, 0, 1})}, {mono({3, 3, 2}), mono({1, 1, 0})}};
  std::vector<RestrictionSpec> cube_specs;
  for (const auto& [m, f] : cube_restrictions) cube_specs.emplace_back(cb.ideal, m, f, sq.ideal, sq_min);
  r.check("I(C3)^3 restrictions are x2x3, x1x3, x1x2 times I(C3)^2", "3 valid",
          std::to_string(cube_specs.size()) + " valid", P::published);
  const std::set<Monomial> cube_min = feasible_min_bf(cb.ideal, cube_specs);
  r.check("feasible minima for I(C3)^3", "{x1^2*x2^2*x3^2}", set_text(cube_min, vars), P::published);

  const std::vector<std::pair<Monomial, Monomial>> fourth_restrictions{
      {mono({3, 4, 4}), mono({0, 1, 1})}, {mono({4, 3, 4}), mono({1, 0, 1})}, {mono({4, 4, 3}), mono({1, 1, 0})}};
  std::vector<RestrictionSpec> fourth_specs;
  for (const auto& [m, f] : fourth_restrictions) fourth_specs.emplace_back(fourth.ideal, m, f, cb.ideal, cube_min);
  const std::set<Monomial> fourth_min = feasible_min_bf(fourth.ideal, fourth_specs);
  r.check("feasible minima for I(C3)^4 (empty, so not bridge-friendly)", "{}", set_text(fourth_min, vars),
          P::published);

  if (r.extended()) {
    r.check("minima of bridge-friendly orders of I(C3)^3 by exhaustion", "{x1^2*x2^2*x3^2}",
            set_text(bf_minima_brute_force(cb.ideal), vars), P::derived);
  }
}

void suite_remark_9cycle(Recorder& r) {
  SearchOptions options = r.search_options();
  const SearchOutcome o = exists_minimal_bm_order(graph_ideal("C9"), options);
  r.check("no order on I(C9) has Barile-Macchia cells equal to the Betti numbers", "exhausted_negative",
          to_string(o.result), P::published);
}

void suite_joined_six_cycles(Recorder& r) {
  const NamedIdeal n = named_edge_ideal(build_named(NamedGraph::joined_six_cycles));
  const TotalOrder ord = parse_order("v*y,u*x,x*z,t*w,y*z,w*z,s*t,s*v,s*u", n);
  r.check("the listed order is bridge-friendly", true, is_bridge_friendly(n.ideal, ord), P::published);
  r.check("lemma search agrees", true, is_bridge_friendly(n.ideal, ord, BridgeFriendlyAlgorithm::lemma),
          P::derived);
  r.check("graph is not chordal", false, is_chordal(build_named(NamedGraph::joined_six_cycles)), P::published);
  r.check("Barile-Macchia cells equal the Betti numbers", true,
          minimality_verdict(critical_cells(n.ideal, ord, Family::barile_macchia), betti_table(n.ideal)).minimal,
          P::trivial);
}

void suite_remark_2_12(Recorder& r) {
  // Variables x, x1, x2, x3.
  const MonomialIdeal I = ideal_of({{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}});
  const MonomialIdeal cube = power(I, 3);
  const MonomialIdeal square = power(I, 2);
  const Monomial top = cube.lcm_of_mask(cube.all());
  std::vector<std::vector<std::uint64_t>> targets;
  for (const auto& f : I.gens()) targets.push_back(totals_by_degree(betti_table(scale(f, square)).counts));
  std::size_t candidates = 0;
  std::size_t matches = 0;
  std::vector<int> e(4, 0);
  for (e[0] = 0; e[0] <= top[0]; ++e[0]) {
    for (e[1] = 0; e[1] <= top[1]; ++e[1]) {
      for (e[2] = 0; e[2] <= top[2]; ++e[2]) {
        for (e[3] = 0; e[3] <= top[3]; ++e[3]) {
          ++candidates;
          const auto sub = try_hhz_subideal(cube, mono(e));
          if (!sub) continue;
          const auto totals = totals_by_degree(betti_table(*sub).counts);
          for (const auto& t : targets) matches += totals == t ? 1 : 0;
        }
      }
    }
  }
  r.check("candidate restriction monomials", "256", std::to_string(candidates), P::published);
  r.check("(m, f) pairs matching the total Betti numbers of f I^2", "0", std::to_string(matches), P::published);
}

struct SuiteEntry {
  SuiteInfo info;
  std::function<void(Recorder&)> body;
};

const std::vector<SuiteEntry>& entries() {
  static const std::vector<SuiteEntry> all{
      {{"example-2.2", "critical sets, subset types and bridge-friendliness for I(C4) under wx > xy > yz > zw",
        RuntimeClass::seconds},
       suite_example_2_2},
      {{"prop-3.1", "nine small graphs whose edge ideals admit no minimal Lyubeznik resolution",
        RuntimeClass::seconds},
       suite_prop_3_1},
      {{"thm-3.5", "the constructed order on I(L(a,b,c)) gives a minimal Lyubeznik resolution, 0 <= a,b,c <= 2",
        RuntimeClass::seconds},
       suite_thm_3_5},
      {{"thm-3.8", "Lyubeznik orders for squares of small edge ideals and for powers of (x,y)",
        RuntimeClass::minutes},
       suite_thm_3_8},
      {{"prop-4.2", "cycles C_n with a bridge-friendly edge ideal", RuntimeClass::minutes}, suite_prop_4_2},
      {{"prop-4.3", "K4, gem, kite and net have no bridge-friendly order", RuntimeClass::minutes}, suite_prop_4_3},
      {{"thm-4.8", "the constructed order on I(BF(T,w)) is bridge-friendly for 20 sampled weighted trees",
        RuntimeClass::minutes},
       suite_thm_4_8},
      {{"prop-4.9", "restrictions of squares of small edge ideals with no bridge-friendly order",
        RuntimeClass::minutes},
       suite_prop_4_9},
      {{"prop-4.10", "bridge-friendliness of powers of I(C3) through feasible minima", RuntimeClass::seconds},
       suite_prop_4_10},
      {{"remark-9cycle", "every order on I(C9) gives a non-minimal Barile-Macchia resolution",
        RuntimeClass::extended},
       suite_remark_9cycle},
      {{"example-joined-6-cycles", "two 6-cycles joined along three edges are bridge-friendly",
        RuntimeClass::seconds},
       suite_joined_six_cycles},
      {{"remark-2.12", "no restriction of I^3 matches f I^2 in total Betti numbers for I = (xx1, xx2, xx3)",
        RuntimeClass::seconds},
       suite_remark_2_12},
  };
  return all;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::published:
      return "published";
    case Provenance::derived:
      return "derived";
    case Provenance::trivial:
      return "trivial";
  }
  return "unknown";
}

std::string to_string(RuntimeClass c) {
  switch (c) {
    case RuntimeClass::seconds:
      return "seconds";
    case RuntimeClass::minutes:
      return "minutes";
    case RuntimeClass::extended:
      return "extended";
  }
  return "unknown";
}

std::optional<RuntimeClass> parse_runtime_class(const std::string& text) {
  for (auto c : {RuntimeClass::seconds, RuntimeClass::minutes, RuntimeClass::extended}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

bool SuiteReport::passed() const {
  return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const SuiteStep& s) { return s.passed; });
}

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

SuiteReport run_suite(const std::string& id, const SuiteOptions& options) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    SuiteReport report;
    report.id = e.info.id;
    report.description = e.info.description;
    report.runtime_class = e.info.runtime_class;
    const auto start = std::chrono::steady_clock::now();
    Recorder recorder(report, options);
    e.body(recorder);
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw InvalidArgument("unknown suite id '" + id + "'");
}

Json suite_report_to_json(const SuiteReport& report) {
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"claim", s.claim},
                     {"expected", s.expected},
                     {"observed", s.observed},
                     {"source", to_string(s.source)},
                     {"passed", s.passed}});
  }
  return Json{{"id", report.id},
              {"description", report.description},
              {"runtime_class", to_string(report.runtime_class)},
              {"passed", report.passed()},
              {"elapsed_seconds", report.elapsed_seconds},
              {"steps", steps}};
}

std::vector<RootedWeightedTree> sample_weighted_trees(std::size_t count, std::uint64_t seed) {
  // Raw engine output with explicit reductions keeps the sample identical
  // across standard library implementations.
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return static_cast<std::size_t>(rng() % bound); };
  std::vector<RootedWeightedTree> out;
  while (out.size() < count) {
    const std::size_t n = 2 + draw(5);
    std::vector<std::string> labels;
    for (std::size_t v = 1; v <= n; ++v) labels.push_back("t" + std::to_string(v));
    std::vector<std::pair<std::string, std::string>> edges;
    if (n == 2) {
      edges.emplace_back(labels[0], labels[1]);
    } else {
      // Decode a random Prüfer sequence.
      std::vector<std::size_t> code(n - 2);
      for (auto& x : code) x = draw(n);
      std::vector<std::size_t> degree(n, 1);
      for (auto x : code) ++degree[x];
      for (auto x : code) {
        std::size_t leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.emplace_back(labels[leaf], labels[x]);
        --degree[leaf];
        --degree[x];
      }
      std::vector<std::size_t> last;
      for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] == 1) last.push_back(v);
      }
      edges.emplace_back(labels[last[0]], labels[last[1]]);
    }
    EdgeWeightedTree tw;
    tw.tree = Graph(labels, edges);
    std::size_t total_edges = 0;
    for (const auto& [a, b] : edges) {
      const unsigned w = static_cast<unsigned>(draw(3));
      tw.weights[std::minmax(a, b, natural_less)] = w;
      total_edges += 1 + 2 * w;
    }
    const std::string root = labels[draw(n)];
    // Keeps every 2^c subset table small; larger draws are redrawn.
    if (total_edges > 18) continue;
    out.push_back(RootedWeightedTree{std::move(tw), root});
  }
  return out;
}

}  // namespace morsecell
