#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "morsecell/graded.hpp"
#include "morsecell/graph.hpp"
#include "morsecell/ideal.hpp"
#include "morsecell/order.hpp"

namespace morsecell {

/// A subset of Mingens(I) together with its lcm.
struct GenSubset {
  GenMask members = 0;
  Monomial lcm;

  static GenSubset of(const MonomialIdeal& ideal, GenMask members);
};

struct SubsetAnalysis {
  GenMask bridges = 0;
  GenMask gaps = 0;
  GenMask true_gaps = 0;
  std::optional<std::size_t> sbridge;
  /// gap -> the ≻-smallest new bridge of σ ∪ {gap} dominated by gap.
  std::map<std::size_t, std::size_t> witnesses;
};

struct TypeVerdict {
  bool type1 = false;
  bool ptype2 = false;
  bool type2 = false;
  bool bm_critical = false;
  friend bool operator==(const TypeVerdict&, const TypeVerdict&) = default;
};

enum class Family { lyubeznik, barile_macchia };

std::string to_string(Family family);

/// Critical cells tallied by (cardinality, lcm).
struct CellTable {
  Family family = Family::lyubeznik;
  std::uint64_t ideal_fingerprint = 0;
  GradedCounts counts;
};

// Direct evaluation of the definitions on a single subset. These work for
// any c <= 63 and serve as the reference for the table-driven engine.

SubsetAnalysis analyze_subset(const MonomialIdeal& ideal, const TotalOrder& order, GenMask sigma);

/// Type classification; M(τ) is recomputed on every call.
TypeVerdict subset_type(const MonomialIdeal& ideal, const TotalOrder& order, GenMask sigma);

bool is_lyubeznik_critical(const MonomialIdeal& ideal, const TotalOrder& order, GenMask sigma);

// Whole-ideal queries. These tabulate all 2^c subsets and throw CapExceeded
// past kMaxEnumerableGens generators.

CellTable critical_cells(const MonomialIdeal& ideal, const TotalOrder& order, Family family);

enum class BridgeFriendlyAlgorithm { definitional, lemma };

bool is_bridge_friendly(const MonomialIdeal& ideal, const TotalOrder& order,
                        BridgeFriendlyAlgorithm algorithm = BridgeFriendlyAlgorithm::definitional);

struct LyubeznikVerdict {
  bool minimal = true;
  /// A Lyubeznik-critical subset with a bridge, when not minimal.
  std::optional<GenMask> witness_set;
  std::optional<std::size_t> witness_bridge;
};

LyubeznikVerdict lyubeznik_minimal(const MonomialIdeal& ideal, const TotalOrder& order);

/// yy_b ≻ … ≻ yy_1 ≻ xx_a ≻ … ≻ xx_1 ≻ yz_c ≻ … ≻ yz_1 ≻ xz_c ≻ … ≻ xz_1 ≻ xy
/// on I(build_labc(a, b, c)).
TotalOrder order_for_labc(std::size_t a, std::size_t b, std::size_t c);

/// The order on I(build_bf(tw)) obtained from the rooted labelling at
/// `root`: tree edges by (parent level, parent position, child position),
/// each preceded by its triangle edges through the parent, then through the
/// child. Throws InvalidArgument when `root` is not a tree vertex.
TotalOrder order_for_bf(const EdgeWeightedTree& tw, const std::string& root);

}  // namespace morsecell
