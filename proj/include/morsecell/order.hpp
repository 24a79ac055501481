#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morsecell/ideal.hpp"

namespace morsecell {

/// A strict total order on Mingens(I), stored as the list of generator
/// indices from the ≻-greatest to the ≻-smallest.
class TotalOrder {
 public:
  TotalOrder() = default;

  /// Throws InvalidArgument unless `ranking` is a permutation of 0..c-1.
  explicit TotalOrder(std::vector<GenIndex> ranking);

  static TotalOrder identity(std::size_t size);

  /// Builds the order from generators listed largest first. Every minimal
  /// generator must appear exactly once.
  static TotalOrder from_monomials(const MonomialIdeal& ideal, std::span<const Monomial> largest_first);

  std::size_t size() const { return ranking_.size(); }
  std::span<const GenIndex> ranking() const { return ranking_; }
  std::size_t rank_of(std::size_t gen) const { return rank_[gen]; }

  /// a ≻ b.
  bool dominates(std::size_t a, std::size_t b) const { return rank_[a] < rank_[b]; }

  /// Generators strictly ≺ gen.
  GenMask dominated_by(std::size_t gen) const { return below_[gen]; }

  /// The ≻-smallest member of a nonempty mask.
  std::size_t smallest(GenMask mask) const;
  /// The ≻-greatest member of a nonempty mask.
  std::size_t largest(GenMask mask) const;

  /// Members of `mask` from ≻-greatest to ≻-smallest.
  std::vector<std::size_t> sorted_members(GenMask mask) const;

  /// Throws InvalidArgument when the order does not fit `ideal`.
  void check_bound_to(const MonomialIdeal& ideal) const;

  friend bool operator==(const TotalOrder& a, const TotalOrder& b) { return a.ranking_ == b.ranking_; }

 private:
  std::vector<GenIndex> ranking_;
  std::vector<std::size_t> rank_;
  std::vector<GenMask> below_;
};

/// The order `parent_order` induces on a subideal whose generators are a
/// subset of the parent's (e.g. an HHZ-subideal).
TotalOrder induced_order(const MonomialIdeal& parent, const TotalOrder& parent_order,
                         const MonomialIdeal& sub);

}  // namespace morsecell
