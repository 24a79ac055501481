#include "morsecell/ideal.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "morsecell/error.hpp"

namespace morsecell {

MonomialIdeal MonomialIdeal::minimalize(std::vector<Monomial> raw) {
  if (raw.empty()) throw ZeroIdeal("cannot build a monomial ideal from an empty generator list");
  const std::size_t n = raw.front().num_vars();
  for (const auto& m : raw) {
    if (m.num_vars() != n) throw AmbientMismatch("generators over different ambient rings");
  }

  // Ascending degree first: a divisor always precedes its proper multiples.
  std::sort(raw.begin(), raw.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  std::vector<Monomial> kept;
  for (const auto& m : raw) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& g) { return divides(g, m); });
    if (!redundant) kept.push_back(m);
  }
  if (kept.size() > kMaxGens) {
    throw CapExceeded("ideal has " + std::to_string(kept.size()) + " minimal generators; cap is " +
                      std::to_string(kMaxGens));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return MonomialIdeal(n, std::move(kept));
}

std::optional<std::size_t> MonomialIdeal::index_of(const Monomial& m) const {
  auto it = std::find(gens_.begin(), gens_.end(), m);
  if (it == gens_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - gens_.begin());
}

GenMask MonomialIdeal::divisors_of(const Monomial& m) const {
  GenMask mask = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (divides(gens_[i], m)) mask |= bit(i);
  }
  return mask;
}

Monomial MonomialIdeal::lcm_of_mask(GenMask mask) const {
  Monomial r(num_vars_);
  for (; mask != 0; mask &= mask - 1) r = lcm(r, gens_[std::countr_zero(mask)]);
  return r;
}

std::uint64_t MonomialIdeal::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ num_vars_;
  for (const auto& g : gens_) {
    h ^= g.hash();
    h *= 0x100000001b3ULL;
  }
  return h;
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n) {
  if (n == 0) throw InvalidArgument("power 0 is the unit ideal, which is not supported");
  MonomialIdeal acc = ideal;
  for (unsigned k = 1; k < n; ++k) {
    std::vector<Monomial> products;
    products.reserve(acc.size() * ideal.size());
    for (const auto& a : acc.gens()) {
      for (const auto& g : ideal.gens()) products.push_back(a * g);
    }
    acc = MonomialIdeal::minimalize(std::move(products));
  }
  return acc;
}

MonomialIdeal scale(const Monomial& m, const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.gens()) gens.push_back(m * g);
  return MonomialIdeal::minimalize(std::move(gens));
}

std::optional<MonomialIdeal> try_hhz_subideal(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> kept;
  for (const auto& g : ideal.gens()) {
    if (divides(g, m)) kept.push_back(g);
  }
  if (kept.empty()) return std::nullopt;
  return MonomialIdeal::minimalize(std::move(kept));
}

MonomialIdeal hhz_subideal(const MonomialIdeal& ideal, const Monomial& m) {
  auto sub = try_hhz_subideal(ideal, m);
  if (!sub) throw ZeroIdeal("no minimal generator divides " + to_string(m));
  return *std::move(sub);
}

std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal) {
  std::unordered_set<Monomial, MonomialHash> seen(ideal.gens().begin(), ideal.gens().end());
  std::vector<Monomial> frontier(ideal.gens().begin(), ideal.gens().end());
  // Joining with single generators is enough to reach every subset lcm.
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& a : frontier) {
      for (const auto& g : ideal.gens()) {
        Monomial j = lcm(a, g);
        if (seen.insert(j).second) next.push_back(j);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Multidegree> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> mask_members(GenMask mask) {
  std::vector<std::size_t> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  return out;
}

}  // namespace morsecell
