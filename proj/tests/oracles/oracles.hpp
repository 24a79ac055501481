#pragma once

// Brute-force reference implementations used only by the tests. They work
// on plain exponent vectors and adjacency matrices and share no code with
// the library engine.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "morsecell/graph.hpp"
#include "morsecell/ideal.hpp"

namespace oracle {

using Exps = std::vector<int>;
using Subset = std::vector<int>;  // generator indices, any order
using Ranking = std::vector<int>;  // generator indices, largest first

std::vector<Exps> gens_of(const morsecell::MonomialIdeal& ideal);

bool divides(const Exps& a, const Exps& b);
Exps lcm(const std::vector<Exps>& gens, const Subset& subset, std::size_t num_vars);

/// Lyubeznik criticality straight from the prefix-divisibility test.
bool lyubeznik_critical(const std::vector<Exps>& gens, const Ranking& ranking, const Subset& subset);

struct BmClass {
  bool type1 = false;
  bool ptype2 = false;
  bool type2 = false;
  bool critical() const { return !type1 && !type2; }
};

/// Barile-Macchia types of every subset (indexed by bitmask over generator
/// indices), evaluated from the definitions with explicit sets.
std::vector<BmClass> bm_classes(const std::vector<Exps>& gens, const Ranking& ranking);

/// Every potentially-type-2 subset is type-2.
bool bridge_friendly(const std::vector<Exps>& gens, const Ranking& ranking);

/// (i, multidegree) -> Betti number of S/I over GF(2), via reduced homology
/// of the upper Koszul simplicial complexes.
std::map<std::pair<int, Exps>, long> koszul_betti(const std::vector<Exps>& gens);

/// Per (cardinality, lcm) counts of the subsets accepted by `keep`.
template <class Pred>
std::map<std::pair<int, Exps>, long> cell_counts(const std::vector<Exps>& gens, Pred keep) {
  std::map<std::pair<int, Exps>, long> out;
  const int c = static_cast<int>(gens.size());
  const std::size_t r = gens.empty() ? 0 : gens[0].size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    Subset s;
    for (int g = 0; g < c; ++g) {
      if ((mask >> g) & 1U) s.push_back(g);
    }
    if (keep(mask, s)) ++out[{static_cast<int>(s.size()), lcm(gens, s, r)}];
  }
  return out;
}

/// Generator permutations induced by permutations of the variables.
std::set<std::vector<int>> variable_symmetries(const std::vector<Exps>& gens);

// Graphs as adjacency matrices.
using Adj = std::vector<std::vector<bool>>;

Adj adjacency_of(const morsecell::Graph& g);
Adj from_edges(int n, const std::vector<std::pair<int, int>>& edges);
bool contains_induced(const Adj& g, const Adj& h);
/// No induced cycle on four or more vertices.
bool chordal(const Adj& g);

/// Forbidden lists: P5, C4, C5, K4, kite, gem, tadpole, butterfly, net for
/// L(a,b,c); K4, gem, kite, net for BF(T,w) among chordal graphs.
bool avoids_labc_forbidden(const Adj& g);
bool avoids_bf_forbidden(const Adj& g);
/// Chordal and every triangle has a vertex of degree 2.
bool triangle_degree_two(const Adj& g);

/// A random minimal monomial ideal with at most `max_gens` generators.
morsecell::MonomialIdeal random_ideal(std::mt19937_64& rng, int max_gens, int max_vars, int max_exp);

}  // namespace oracle
