#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "morsecell/betti.hpp"
#include "morsecell/ideal.hpp"
#include "morsecell/order.hpp"
#include "morsecell/subset_tables.hpp"

namespace morsecell {

/// Generator permutations induced by ambient-variable permutations that
/// fix Mingens(I); perm[g] is the image of generator g. Sorted, identity
/// first. Throws CapExceeded past 10 variables.
std::vector<std::vector<GenIndex>> symmetries(const MonomialIdeal& ideal);

enum class SearchResult { witness_found, exhausted_negative, budget_exceeded };

std::string to_string(SearchResult result);

struct SearchStats {
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  double elapsed_seconds = 0.0;
};

struct SearchOutcome {
  SearchResult result = SearchResult::exhausted_negative;
  std::optional<TotalOrder> witness;
  /// Lexicographic rank of the witness among all c! orders.
  std::optional<std::uint64_t> witness_rank;
  SearchStats stats;
};

struct SearchOptions {
  /// Maximum number of orders to evaluate; unlimited when empty.
  std::optional<std::uint64_t> budget;
  bool use_symmetry = false;
  unsigned jobs = 1;
};

/// Largest ideal for which order search runs (c! must fit the rank type).
inline constexpr std::size_t kMaxSearchGens = 20;

/// Called after set_order; must not keep state across calls other than
/// thread-local scratch.
using OrderPredicate = std::function<bool(OrderClassifier&)>;

/// Walks orders by lexicographic rank and returns the lowest-rank order
/// satisfying `predicate`. The result does not depend on `jobs`.
SearchOutcome search_orders(const MonomialIdeal& ideal, const OrderPredicate& predicate,
                            const SearchOptions& options = {});

SearchOutcome exists_lyubeznik_order(const MonomialIdeal& ideal, const SearchOptions& options = {});

SearchOutcome exists_bf_order(const MonomialIdeal& ideal, const SearchOptions& options = {});

/// An order whose Barile-Macchia cells match the Betti table of I.
SearchOutcome exists_minimal_bm_order(const MonomialIdeal& ideal, const SearchOptions& options = {});

/// Lexicographic rank <-> permutation of 0..c-1.
std::vector<GenIndex> unrank_permutation(std::uint64_t rank, std::size_t size);
std::uint64_t rank_permutation(std::span<const GenIndex> perm);

/// An HHZ-restriction I^{<=m} = f · sub together with the known feasible
/// minima of bridge-friendly orders of `sub`.
class RestrictionSpec {
 public:
  /// Throws InvalidArgument unless hhz_subideal(parent, m) = scale(f, sub).
  RestrictionSpec(const MonomialIdeal& parent, Monomial m, Monomial f, MonomialIdeal sub,
                  std::set<Monomial> feasible_min_of_sub);

  const Monomial& m() const { return m_; }
  const Monomial& f() const { return f_; }
  const MonomialIdeal& sub() const { return sub_; }
  const std::set<Monomial>& feasible_min_of_sub() const { return feasible_; }

 private:
  Monomial m_;
  Monomial f_;
  MonomialIdeal sub_;
  std::set<Monomial> feasible_;
};

/// Minima over all bridge-friendly orders of I, by exhaustion.
std::set<Monomial> bf_minima_brute_force(const MonomialIdeal& ideal);

/// Generators g such that, for every restriction with g | m, g/f is a
/// feasible minimum of the restriction. With `brute_force` the exact set
/// from bf_minima_brute_force is returned instead.
std::set<Monomial> feasible_min_bf(const MonomialIdeal& ideal, const std::vector<RestrictionSpec>& restrictions,
                                   bool brute_force = false);

}  // namespace morsecell
