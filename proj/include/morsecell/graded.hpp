#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "morsecell/monomial.hpp"

namespace morsecell {

/// (homological degree, multidegree) key shared by Betti tables and
/// critical-cell tables.
struct GradedKey {
  unsigned i = 0;
  Multidegree degree;

  friend auto operator<=>(const GradedKey&, const GradedKey&) = default;
  friend bool operator==(const GradedKey&, const GradedKey&) = default;
};

/// Nonzero counts only; absent keys mean zero.
using GradedCounts = std::map<GradedKey, std::uint64_t>;

inline std::uint64_t count_at(const GradedCounts& counts, const GradedKey& key) {
  auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

/// Totals per homological degree, index i holds the sum over all multidegrees.
inline std::vector<std::uint64_t> totals_by_degree(const GradedCounts& counts) {
  std::vector<std::uint64_t> totals;
  for (const auto& [key, value] : counts) {
    if (totals.size() <= key.i) totals.resize(key.i + 1, 0);
    totals[key.i] += value;
  }
  return totals;
}

}  // namespace morsecell
