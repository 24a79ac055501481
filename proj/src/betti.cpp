#include "morsecell/betti.hpp"

#include <bit>
#include <map>
#include <utility>

#include "morsecell/error.hpp"
#include "morsecell/subset_tables.hpp"

namespace morsecell {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  if (value) {
    bits_[r * words_ + c / 64] |= mask;
  } else {
    bits_[r * words_ + c / 64] &= ~mask;
  }
}

std::size_t gf2_rank(Gf2Matrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols_ && rank < m.rows_; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows_ && !(m.bits_[pivot * m.words_ + w] & mask)) ++pivot;
    if (pivot == m.rows_) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < m.words_; ++k) std::swap(m.bits_[pivot * m.words_ + k], m.bits_[rank * m.words_ + k]);
    }
    const std::uint64_t* prow = &m.bits_[rank * m.words_];
    for (std::size_t r = rank + 1; r < m.rows_; ++r) {
      std::uint64_t* row = &m.bits_[r * m.words_];
      if (row[w] & mask) {
        for (std::size_t k = w; k < m.words_; ++k) row[k] ^= prow[k];
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

// Rank of the boundary from cardinality-i cells to cardinality-(i-1) cells
// of one strand. Both bases are sorted by mask value.
std::size_t boundary_rank(const SubsetTables& tables, std::uint32_t id, const std::vector<TableMask>& upper,
                          const std::vector<TableMask>& lower) {
  if (upper.empty() || lower.empty()) return 0;
  std::map<TableMask, std::size_t> column;
  for (std::size_t k = 0; k < lower.size(); ++k) column.emplace(lower[k], k);
  Gf2Matrix m(upper.size(), lower.size());
  for (std::size_t r = 0; r < upper.size(); ++r) {
    for (TableMask g = upper[r]; g != 0; g &= g - 1) {
      const TableMask face = upper[r] ^ (g & (~g + 1));
      if (tables.lcm_id(face) != id) continue;
      m.set(r, column.at(face));
    }
  }
  return gf2_rank(std::move(m));
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal) {
  const std::size_t c = ideal.size();
  if (c > kMaxBettiGens) {
    throw CapExceeded("Betti computation is limited to " + std::to_string(kMaxBettiGens) + " generators");
  }
  SubsetTables tables(ideal);
  // strands[id][i] = subsets of cardinality i with that lcm, by mask value.
  std::vector<std::vector<std::vector<TableMask>>> strands(tables.num_lcms(),
                                                          std::vector<std::vector<TableMask>>(c + 2));
  for (std::size_t s = 0; s < tables.num_subsets(); ++s) {
    const auto mask = static_cast<TableMask>(s);
    strands[tables.lcm_id(mask)][std::popcount(mask)].push_back(mask);
  }
  BettiTable out;
  out.ideal_fingerprint = ideal.fingerprint();
  for (std::uint32_t id = 0; id < tables.num_lcms(); ++id) {
    const auto& levels = strands[id];
    // rank_of[i] = rank of the boundary leaving cardinality i.
    std::vector<std::size_t> rank_of(c + 2, 0);
    for (std::size_t i = 1; i <= c; ++i) rank_of[i] = boundary_rank(tables, id, levels[i], levels[i - 1]);
    for (unsigned i = 0; i <= c; ++i) {
      const std::size_t dim = levels[i].size();
      if (dim == 0) continue;
      const std::size_t beta = dim - rank_of[i] - rank_of[i + 1];
      if (beta != 0) out.counts[GradedKey{i, tables.lcm_value(id)}] = beta;
    }
  }
  return out;
}

MinimalityVerdict minimality_verdict(const CellTable& cells, const BettiTable& betti) {
  if (cells.ideal_fingerprint != betti.ideal_fingerprint) {
    throw InvalidArgument("cell table and Betti table belong to different ideals");
  }
  MinimalityVerdict out;
  std::map<GradedKey, std::pair<std::uint64_t, std::uint64_t>> merged;
  for (const auto& [key, value] : cells.counts) merged[key].first = value;
  for (const auto& [key, value] : betti.counts) merged[key].second = value;
  for (const auto& [key, values] : merged) {
    if (values.first != values.second) {
      out.minimal = false;
      out.discrepancy = key;
      out.cells_value = values.first;
      out.betti_value = values.second;
      break;
    }
  }
  return out;
}

bool euler_check(const CellTable& cells, const BettiTable& betti) {
  std::map<Multidegree, std::int64_t> balance;
  for (const auto& [key, value] : cells.counts) {
    balance[key.degree] += (key.i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(value);
  }
  for (const auto& [key, value] : betti.counts) {
    balance[key.degree] -= (key.i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(value);
  }
  for (const auto& [degree, value] : balance) {
    if (value != 0) return false;
  }
  return true;
}

}  // namespace morsecell
