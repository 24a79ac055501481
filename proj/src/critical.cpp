#include "morsecell/critical.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "morsecell/error.hpp"
#include "morsecell/subset_tables.hpp"

namespace morsecell {

namespace {

GenMask bridges_of(const MonomialIdeal& ideal, GenMask sigma, const Monomial& l) {
  GenMask out = 0;
  for (GenMask m = sigma; m != 0; m &= m - 1) {
    const auto g = static_cast<std::size_t>(std::countr_zero(m));
    if (ideal.lcm_of_mask(sigma ^ bit(g)) == l) out |= bit(g);
  }
  return out;
}

void check_subset(const MonomialIdeal& ideal, const TotalOrder& order, GenMask sigma) {
  order.check_bound_to(ideal);
  if ((sigma & ~ideal.all()) != 0) throw InvalidArgument("subset mentions a generator index past the ideal");
}

// Some element of `from` dominates no element of `against`.
bool has_undominating(const TotalOrder& order, GenMask from, GenMask against) {
  for (GenMask a = from; a != 0; a &= a - 1) {
    const auto x = static_cast<std::size_t>(std::countr_zero(a));
    bool dominates_some = false;
    for (GenMask b = against; b != 0 && !dominates_some; b &= b - 1) {
      dominates_some = order.dominates(x, static_cast<std::size_t>(std::countr_zero(b)));
    }
    if (!dominates_some) return true;
  }
  return false;
}

struct LocalTypes {
  SubsetAnalysis analysis;
  bool type1 = false;
  bool ptype2 = false;
};

LocalTypes local_types(const MonomialIdeal& ideal, const TotalOrder& order, GenMask sigma) {
  LocalTypes out;
  out.analysis = analyze_subset(ideal, order, sigma);
  out.type1 = has_undominating(order, out.analysis.true_gaps, out.analysis.bridges);
  out.ptype2 = has_undominating(order, out.analysis.bridges, out.analysis.true_gaps);
  return out;
}

GenMask to_gen_mask(TableMask m) { return static_cast<GenMask>(m); }

}  // namespace

GenSubset GenSubset::of(const MonomialIdeal& ideal, GenMask members) {
  return GenSubset{members, ideal.lcm_of_mask(members)};
}

std::string to_string(Family family) {
  return family == Family::lyubeznik ? "lyubeznik" : "barile_macchia";
}

SubsetAnalysis analyze_subset(const MonomialIdeal& ideal, const TotalOrder& order, GenMask sigma) {
  check_subset(ideal, order, sigma);
  SubsetAnalysis out;
  const Monomial l = ideal.lcm_of_mask(sigma);
  out.bridges = bridges_of(ideal, sigma, l);
  for (std::size_t g = 0; g < ideal.size(); ++g) {
    if (!(sigma & bit(g)) && divides(ideal.gen(g), l)) out.gaps |= bit(g);
  }
  for (GenMask m = out.gaps; m != 0; m &= m - 1) {
    const auto g = static_cast<std::size_t>(std::countr_zero(m));
    const GenMask fresh = bridges_of(ideal, sigma | bit(g), l) & ~out.bridges & order.dominated_by(g);
    if (fresh == 0) {
      out.true_gaps |= bit(g);
    } else {
      out.witnesses[g] = order.smallest(fresh);
    }
  }
  if (out.bridges != 0) out.sbridge = order.smallest(out.bridges);
  return out;
}

TypeVerdict subset_type(const MonomialIdeal& ideal, const TotalOrder& order, GenMask sigma) {
  const LocalTypes here = local_types(ideal, order, sigma);
  TypeVerdict out;
  out.type1 = here.type1;
  out.ptype2 = here.ptype2;
  if (out.ptype2) {
    const std::size_t sb = *here.analysis.sbridge;
    const GenMask tau = sigma ^ bit(sb);
    GenMask m_set = 0;
    for (std::size_t m = 0; m < ideal.size(); ++m) {
      if (tau & bit(m)) continue;
      const LocalTypes other = local_types(ideal, order, tau | bit(m));
      if (other.ptype2 && other.analysis.sbridge == m) m_set |= bit(m);
    }
    out.type2 = m_set != 0 && order.smallest(m_set) == sb;
  }
  out.bm_critical = !out.type1 && !out.type2;
  return out;
}

bool is_lyubeznik_critical(const MonomialIdeal& ideal, const TotalOrder& order, GenMask sigma) {
  check_subset(ideal, order, sigma);
  const auto members = order.sorted_members(sigma);
  Monomial l = Monomial(ideal.num_vars());
  for (std::size_t t = 0; t < members.size(); ++t) {
    l = lcm(l, ideal.gen(members[t]));
    if (t == 0) continue;
    for (std::size_t g = 0; g < ideal.size(); ++g) {
      if (order.dominates(members[t], g) && divides(ideal.gen(g), l)) return false;
    }
  }
  return true;
}

CellTable critical_cells(const MonomialIdeal& ideal, const TotalOrder& order, Family family) {
  order.check_bound_to(ideal);
  SubsetTables tables(ideal);
  OrderClassifier classifier(tables);
  classifier.set_order(order.ranking());
  std::vector<std::uint8_t> critical;
  if (family == Family::lyubeznik) {
    classifier.lyubeznik_critical_flags(critical);
  } else {
    classifier.classify_barile_macchia();
    critical.resize(tables.num_subsets());
    for (std::size_t s = 0; s < tables.num_subsets(); ++s) {
      critical[s] = classifier.bm_critical(static_cast<TableMask>(s)) ? 1 : 0;
    }
  }
  std::vector<std::vector<std::uint64_t>> by_id(tables.num_lcms(), std::vector<std::uint64_t>(ideal.size() + 1, 0));
  for (std::size_t s = 0; s < tables.num_subsets(); ++s) {
    if (critical[s]) ++by_id[tables.lcm_id(static_cast<TableMask>(s))][std::popcount(s)];
  }
  CellTable out;
  out.family = family;
  out.ideal_fingerprint = ideal.fingerprint();
  for (std::uint32_t id = 0; id < tables.num_lcms(); ++id) {
    for (unsigned i = 0; i <= ideal.size(); ++i) {
      if (by_id[id][i] != 0) out.counts[GradedKey{i, tables.lcm_value(id)}] = by_id[id][i];
    }
  }
  return out;
}

bool is_bridge_friendly(const MonomialIdeal& ideal, const TotalOrder& order, BridgeFriendlyAlgorithm algorithm) {
  order.check_bound_to(ideal);
  SubsetTables tables(ideal);
  OrderClassifier classifier(tables);
  classifier.set_order(order.ranking());
  return algorithm == BridgeFriendlyAlgorithm::definitional ? classifier.bridge_friendly_definitional()
                                                            : classifier.bridge_friendly_lemma();
}

LyubeznikVerdict lyubeznik_minimal(const MonomialIdeal& ideal, const TotalOrder& order) {
  order.check_bound_to(ideal);
  SubsetTables tables(ideal);
  OrderClassifier classifier(tables);
  classifier.set_order(order.ranking());
  TableMask set = 0;
  std::size_t bridge = 0;
  LyubeznikVerdict out;
  out.minimal = classifier.lyubeznik_minimal(&set, &bridge);
  if (!out.minimal) {
    out.witness_set = to_gen_mask(set);
    out.witness_bridge = bridge;
  }
  return out;
}

TotalOrder order_for_labc(std::size_t a, std::size_t b, std::size_t c) {
  const Graph g = build_labc(a, b, c);
  const MonomialIdeal ideal = edge_ideal(g);
  auto at = [&](const std::string& label) { return *g.index_of(label); };
  const std::size_t x = at("x");
  const std::size_t y = at("y");
  std::vector<Monomial> listed;
  for (std::size_t j = b; j >= 1; --j) listed.push_back(edge_monomial(g, y, at("y" + std::to_string(j))));
  for (std::size_t i = a; i >= 1; --i) listed.push_back(edge_monomial(g, x, at("x" + std::to_string(i))));
  for (std::size_t k = c; k >= 1; --k) listed.push_back(edge_monomial(g, y, at("z" + std::to_string(k))));
  for (std::size_t k = c; k >= 1; --k) listed.push_back(edge_monomial(g, x, at("z" + std::to_string(k))));
  listed.push_back(edge_monomial(g, x, y));
  return TotalOrder::from_monomials(ideal, listed);
}

TotalOrder order_for_bf(const EdgeWeightedTree& tw, const std::string& root) {
  tw.validate();
  const auto root_index = tw.tree.index_of(root);
  if (!root_index) throw InvalidArgument("root '" + root + "' is not a vertex of the tree");
  const Graph g = build_bf(tw);
  const MonomialIdeal ideal = edge_ideal(g);
  const RootedTreeLabeling labeling = label_rooted_tree(tw.tree, *root_index);
  auto at = [&](const std::string& label) { return *g.index_of(label); };
  std::vector<Monomial> listed;
  // Level i+1 is already sorted by parent position, so walking it in order
  // visits tree edges by (i, j, k).
  for (std::size_t level = 1; level < labeling.levels.size(); ++level) {
    for (std::size_t child : labeling.levels[level]) {
      const std::string& p = tw.tree.label(labeling.parent[child]);
      const std::string& q = tw.tree.label(child);
      const auto [lo, hi] = std::minmax(p, q, natural_less);
      const unsigned w = tw.weight(p, q);
      for (unsigned i = 1; i <= w; ++i) {
        listed.push_back(edge_monomial(g, at(p), at("v" + lo + "." + hi + "." + std::to_string(i))));
      }
      for (unsigned i = 1; i <= w; ++i) {
        listed.push_back(edge_monomial(g, at(q), at("v" + lo + "." + hi + "." + std::to_string(i))));
      }
      listed.push_back(edge_monomial(g, at(p), at(q)));
    }
  }
  return TotalOrder::from_monomials(ideal, listed);
}

}  // namespace morsecell
