#include "morsecell/order.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "morsecell/error.hpp"

namespace morsecell {

TotalOrder::TotalOrder(std::vector<GenIndex> ranking) : ranking_(std::move(ranking)) {
  const std::size_t c = ranking_.size();
  if (c > kMaxGens) throw CapExceeded("orders are limited to " + std::to_string(kMaxGens) + " generators");
  rank_.assign(c, c);
  for (std::size_t r = 0; r < c; ++r) {
    std::size_t g = ranking_[r];
    if (g >= c || rank_[g] != c) throw InvalidArgument("ranking is not a permutation");
    rank_[g] = r;
  }
  below_.assign(c, 0);
  GenMask suffix = 0;
  for (std::size_t r = c; r-- > 0;) {
    below_[ranking_[r]] = suffix;
    suffix |= bit(ranking_[r]);
  }
}

TotalOrder TotalOrder::identity(std::size_t size) {
  std::vector<GenIndex> ranking(size);
  std::iota(ranking.begin(), ranking.end(), GenIndex{0});
  return TotalOrder(std::move(ranking));
}

TotalOrder TotalOrder::from_monomials(const MonomialIdeal& ideal, std::span<const Monomial> largest_first) {
  if (largest_first.size() != ideal.size()) {
    throw InvalidArgument("order lists " + std::to_string(largest_first.size()) + " monomials but the ideal has " +
                          std::to_string(ideal.size()) + " minimal generators");
  }
  std::vector<GenIndex> ranking;
  for (const auto& m : largest_first) {
    auto idx = ideal.index_of(m);
    if (!idx) throw InvalidArgument("order mentions " + to_string(m) + ", which is not a minimal generator");
    ranking.push_back(static_cast<GenIndex>(*idx));
  }
  return TotalOrder(std::move(ranking));
}

std::size_t TotalOrder::smallest(GenMask mask) const {
  std::size_t best = 0;
  std::size_t best_rank = 0;
  bool found = false;
  for (GenMask m = mask; m != 0; m &= m - 1) {
    auto g = static_cast<std::size_t>(std::countr_zero(m));
    if (!found || rank_[g] > best_rank) {
      best = g;
      best_rank = rank_[g];
      found = true;
    }
  }
  if (!found) throw InvalidArgument("smallest() of an empty set");
  return best;
}

std::size_t TotalOrder::largest(GenMask mask) const {
  std::size_t best = 0;
  std::size_t best_rank = 0;
  bool found = false;
  for (GenMask m = mask; m != 0; m &= m - 1) {
    auto g = static_cast<std::size_t>(std::countr_zero(m));
    if (!found || rank_[g] < best_rank) {
      best = g;
      best_rank = rank_[g];
      found = true;
    }
  }
  if (!found) throw InvalidArgument("largest() of an empty set");
  return best;
}

std::vector<std::size_t> TotalOrder::sorted_members(GenMask mask) const {
  std::vector<std::size_t> out;
  for (auto g : ranking_) {
    if (mask & bit(g)) out.push_back(g);
  }
  return out;
}

void TotalOrder::check_bound_to(const MonomialIdeal& ideal) const {
  if (size() != ideal.size()) {
    throw InvalidArgument("order on " + std::to_string(size()) + " generators used with an ideal of " +
                          std::to_string(ideal.size()));
  }
}

TotalOrder induced_order(const MonomialIdeal& parent, const TotalOrder& parent_order, const MonomialIdeal& sub) {
  parent_order.check_bound_to(parent);
  std::vector<Monomial> listed;
  for (auto g : parent_order.ranking()) {
    if (sub.index_of(parent.gen(g))) listed.push_back(parent.gen(g));
  }
  return TotalOrder::from_monomials(sub, listed);
}

}  // namespace morsecell
