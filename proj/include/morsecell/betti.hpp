#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "morsecell/critical.hpp"
#include "morsecell/graded.hpp"
#include "morsecell/ideal.hpp"

namespace morsecell {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U; }
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  friend std::size_t gf2_rank(Gf2Matrix m);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

std::size_t gf2_rank(Gf2Matrix m);

/// Multigraded Betti numbers of S/I over GF(2).
struct BettiTable {
  std::uint64_t ideal_fingerprint = 0;
  GradedCounts counts;
};

inline constexpr std::size_t kMaxBettiGens = 20;

/// Homology of each multidegree strand of the Taylor complex. Throws
/// CapExceeded past kMaxBettiGens generators.
BettiTable betti_table(const MonomialIdeal& ideal);

struct MinimalityVerdict {
  bool minimal = true;
  /// First (i, b) in key order where the tables differ.
  std::optional<GradedKey> discrepancy;
  std::uint64_t cells_value = 0;
  std::uint64_t betti_value = 0;
};

/// Throws InvalidArgument when the tables come from different ideals.
MinimalityVerdict minimality_verdict(const CellTable& cells, const BettiTable& betti);

/// Σ (−1)^i cells(i, b) = Σ (−1)^i betti(i, b) for every multidegree b.
bool euler_check(const CellTable& cells, const BettiTable& betti);

}  // namespace morsecell
