#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "morsecell/graded.hpp"
#include "morsecell/ideal.hpp"

namespace morsecell {

/// Widest ideal for which all 2^c subsets are tabulated.
inline constexpr std::size_t kMaxEnumerableGens = 22;

using TableMask = std::uint32_t;

/// Order-independent data for every subset σ of Mingens(I): the interned
/// lcm, the generators dividing lcm(σ), and the bridge set. Gaps are the
/// divisors outside σ.
class SubsetTables {
 public:
  /// Throws CapExceeded when the ideal has more than kMaxEnumerableGens generators.
  explicit SubsetTables(const MonomialIdeal& ideal);

  const MonomialIdeal& ideal() const { return ideal_; }
  std::size_t size() const { return ideal_.size(); }
  std::size_t num_subsets() const { return lcm_id_.size(); }

  std::uint32_t lcm_id(TableMask s) const { return lcm_id_[s]; }
  const Multidegree& lcm_value(std::uint32_t id) const { return lcms_[id]; }
  std::size_t num_lcms() const { return lcms_.size(); }

  TableMask divisors(TableMask s) const { return divisors_[lcm_id_[s]]; }
  TableMask bridges(TableMask s) const { return bridges_[s]; }
  TableMask gaps(TableMask s) const { return divisors(s) & ~s; }

 private:
  MonomialIdeal ideal_;
  std::vector<std::uint32_t> lcm_id_;
  std::vector<Multidegree> lcms_;
  std::vector<TableMask> divisors_;  // indexed by lcm id
  std::vector<TableMask> bridges_;
};

/// Reusable scratch space for evaluating one total order at a time against
/// a fixed SubsetTables. Not thread-safe; use one per worker.
class OrderClassifier {
 public:
  explicit OrderClassifier(const SubsetTables& tables);

  /// Sets the order, given as generator indices from ≻-greatest down.
  void set_order(std::span<const GenIndex> ranking);

  /// Lyubeznik minimality with early exit. On failure stores the first
  /// offending (σ, bridge) found in ranking-prefix enumeration order.
  bool lyubeznik_minimal(TableMask* witness_set = nullptr, std::size_t* witness_bridge = nullptr);

  /// Fills `critical` (indexed by subset mask) with Lyubeznik-criticality.
  void lyubeznik_critical_flags(std::vector<std::uint8_t>& critical);

  /// Definitional bridge-friendliness: every potentially-type-2 subset is
  /// type-2, i.e. for every τ at most one m has τ ∪ {m} potentially-type-2
  /// with smallest bridge m. Exits at the first failing τ.
  bool bridge_friendly_definitional(TableMask* failing_tau = nullptr);

  /// Bridge-friendliness by searching for a type-1 τ with two true gaps
  /// m1 ≻ m2 (m2 the smallest true gap) that dominate no bridge of τ and
  /// make τ ∪ {m_i} potentially-type-2.
  bool bridge_friendly_lemma(TableMask* failing_tau = nullptr);

  /// Classifies every subset; afterwards bm_critical() is valid.
  void classify_barile_macchia();
  bool bm_critical(TableMask s) const { return (flags_[s] & kBmCritical) != 0; }
  bool type1(TableMask s) const { return (flags_[s] & kType1) != 0; }
  bool ptype2(TableMask s) const { return (flags_[s] & kPtype2) != 0; }
  bool type2(TableMask s) const { return (flags_[s] & kType2) != 0; }
  TableMask true_gaps(TableMask s) const { return true_gaps_[s]; }

  /// Barile-Macchia minimality against known Betti numbers (indexed by
  /// lcm id then homological degree), exiting as soon as some count exceeds
  /// the Betti number.
  bool barile_macchia_matches(const std::vector<std::vector<std::uint64_t>>& betti_by_lcm);

 private:
  static constexpr std::uint8_t kType1 = 1;
  static constexpr std::uint8_t kPtype2 = 2;
  static constexpr std::uint8_t kType2 = 4;
  static constexpr std::uint8_t kBmCritical = 8;
  static constexpr std::uint8_t kNoBridge = 0xff;

  void compute_local(TableMask s);
  /// Generators m ∉ τ with τ ∪ {m} potentially-type-2 and sbridge m; returns
  /// the ≻-smallest and the count (capped at 2 when `stop_at_two`).
  std::pair<std::uint8_t, unsigned> scan_m_set(TableMask tau, bool stop_at_two) const;
  std::size_t max_rank_member(TableMask m) const;

  const SubsetTables& tables_;
  std::size_t c_;
  std::vector<GenIndex> ranking_;
  std::vector<std::uint8_t> rank_;
  std::vector<TableMask> below_;
  std::vector<TableMask> true_gaps_;
  std::vector<std::uint8_t> flags_;
  std::vector<std::uint8_t> sbridge_;
  std::vector<TableMask> rank_space_;  // scratch for prefix enumeration
  std::vector<std::uint8_t> scratch_;
};

/// Lookup from lcm id to a dense Betti vector, built from a table.
std::vector<std::vector<std::uint64_t>> betti_by_lcm_id(const SubsetTables& tables, const GradedCounts& betti);

}  // namespace morsecell
