#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "morsecell/monomial.hpp"

namespace morsecell {

/// Subsets of Mingens(I) are bitmasks over canonical generator indices.
using GenMask = std::uint64_t;
using GenIndex = std::uint8_t;

inline constexpr std::size_t kMaxGens = 63;

inline constexpr GenMask bit(std::size_t i) { return GenMask{1} << i; }

/// A nonzero monomial ideal, represented by Mingens(I) in canonical order
/// (descending lexicographic on exponent vectors).
class MonomialIdeal {
 public:
  /// Drops duplicates and non-minimal elements, then sorts canonically.
  /// Throws ZeroIdeal on an empty list and CapExceeded past kMaxGens.
  static MonomialIdeal minimalize(std::vector<Monomial> raw);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<Monomial>& gens() const { return gens_; }
  const Monomial& gen(std::size_t i) const { return gens_[i]; }

  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Mask of generators dividing `m`.
  GenMask divisors_of(const Monomial& m) const;

  /// lcm of the generators selected by `mask`.
  Monomial lcm_of_mask(GenMask mask) const;

  GenMask all() const { return size() == 64 ? ~GenMask{0} : bit(size()) - 1; }

  /// Stable 64-bit digest of the generator list; tables carry it so that
  /// results from different ideals are never compared.
  std::uint64_t fingerprint() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens)
      : num_vars_(num_vars), gens_(std::move(gens)) {}

  std::size_t num_vars_ = 0;
  std::vector<Monomial> gens_;
};

/// I^n, n >= 1.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n);

/// The ideal m·I.
MonomialIdeal scale(const Monomial& m, const MonomialIdeal& ideal);

/// I^{<=m}: the subideal generated by the minimal generators dividing m.
/// Throws ZeroIdeal when no generator divides m.
MonomialIdeal hhz_subideal(const MonomialIdeal& ideal, const Monomial& m);

/// Same as hhz_subideal but reports the zero ideal as nullopt.
std::optional<MonomialIdeal> try_hhz_subideal(const MonomialIdeal& ideal, const Monomial& m);

/// Join-closure of Mingens(I) under lcm, sorted ascending.
std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal);

/// Generator indices of `ideal` in the order they occur, selected by mask.
std::vector<std::size_t> mask_members(GenMask mask);

}  // namespace morsecell
