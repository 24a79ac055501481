#include "morsecell/subset_tables.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "morsecell/error.hpp"

namespace morsecell {

SubsetTables::SubsetTables(const MonomialIdeal& ideal) : ideal_(ideal) {
  const std::size_t c = ideal.size();
  if (c > kMaxEnumerableGens) {
    throw CapExceeded("subset enumeration is limited to " + std::to_string(kMaxEnumerableGens) +
                      " generators, ideal has " + std::to_string(c));
  }
  const std::size_t n = std::size_t{1} << c;
  lcm_id_.resize(n);
  bridges_.assign(n, 0);

  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  auto intern = [&](const Monomial& m) {
    auto [it, inserted] = index.try_emplace(m, static_cast<std::uint32_t>(lcms_.size()));
    if (inserted) lcms_.push_back(m);
    return it->second;
  };
  lcm_id_[0] = intern(Monomial(ideal.num_vars()));
  for (std::size_t s = 1; s < n; ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    const Monomial joined = lcm(lcms_[lcm_id_[s & (s - 1)]], ideal.gen(low));
    lcm_id_[s] = intern(joined);
  }

  divisors_.resize(lcms_.size());
  for (std::size_t id = 0; id < lcms_.size(); ++id) {
    divisors_[id] = static_cast<TableMask>(ideal.divisors_of(lcms_[id]));
  }
  for (std::size_t s = 1; s < n; ++s) {
    TableMask b = 0;
    for (auto m = static_cast<TableMask>(s); m != 0; m &= m - 1) {
      const TableMask one = m & (~m + 1);
      if (lcm_id_[s ^ one] == lcm_id_[s]) b |= one;
    }
    bridges_[s] = b;
  }
}

OrderClassifier::OrderClassifier(const SubsetTables& tables)
    : tables_(tables),
      c_(tables.size()),
      rank_(c_, 0),
      below_(c_, 0),
      true_gaps_(tables.num_subsets(), 0),
      flags_(tables.num_subsets(), 0),
      sbridge_(tables.num_subsets(), kNoBridge),
      rank_space_(tables.num_subsets(), 0),
      scratch_(tables.num_subsets(), 0) {}

void OrderClassifier::set_order(std::span<const GenIndex> ranking) {
  if (ranking.size() != c_) throw InvalidArgument("order size does not match the ideal");
  ranking_.assign(ranking.begin(), ranking.end());
  TableMask suffix = 0;
  for (std::size_t r = c_; r-- > 0;) {
    rank_[ranking_[r]] = static_cast<std::uint8_t>(r);
    below_[ranking_[r]] = suffix;
    suffix |= TableMask{1} << ranking_[r];
  }
}

std::size_t OrderClassifier::max_rank_member(TableMask m) const {
  std::size_t best = static_cast<std::size_t>(std::countr_zero(m));
  for (m &= m - 1; m != 0; m &= m - 1) {
    const auto g = static_cast<std::size_t>(std::countr_zero(m));
    if (rank_[g] > rank_[best]) best = g;
  }
  return best;
}

bool OrderClassifier::lyubeznik_minimal(TableMask* witness_set, std::size_t* witness_bridge) {
  // Subsets are walked in rank space: bit r stands for the generator of
  // rank r, so dropping the highest bit drops the ≻-smallest member and
  // criticality of σ extends that of its prefix.
  const std::size_t n = tables_.num_subsets();
  rank_space_[0] = 0;
  scratch_[0] = 1;
  for (std::size_t rho = 1; rho < n; ++rho) {
    const auto hb = static_cast<std::size_t>(31 - std::countl_zero(static_cast<std::uint32_t>(rho)));
    const std::size_t rest = rho ^ (std::size_t{1} << hb);
    const GenIndex g = ranking_[hb];
    const TableMask gm = rank_space_[rest] | (TableMask{1} << g);
    rank_space_[rho] = gm;
    if (!scratch_[rest]) {
      scratch_[rho] = 0;
      continue;
    }
    const bool ok = rest == 0 || (tables_.divisors(gm) & below_[g]) == 0;
    scratch_[rho] = ok ? 1 : 0;
    if (ok) {
      if (TableMask b = tables_.bridges(gm); b != 0) {
        if (witness_set) *witness_set = gm;
        if (witness_bridge) {
          std::size_t best = static_cast<std::size_t>(std::countr_zero(b));
          for (TableMask m = b; m != 0; m &= m - 1) {
            const auto x = static_cast<std::size_t>(std::countr_zero(m));
            if (rank_[x] < rank_[best]) best = x;
          }
          *witness_bridge = best;
        }
        return false;
      }
    }
  }
  return true;
}

void OrderClassifier::lyubeznik_critical_flags(std::vector<std::uint8_t>& critical) {
  const std::size_t n = tables_.num_subsets();
  critical.assign(n, 0);
  rank_space_[0] = 0;
  scratch_[0] = 1;
  critical[0] = 1;
  for (std::size_t rho = 1; rho < n; ++rho) {
    const auto hb = static_cast<std::size_t>(31 - std::countl_zero(static_cast<std::uint32_t>(rho)));
    const std::size_t rest = rho ^ (std::size_t{1} << hb);
    const GenIndex g = ranking_[hb];
    const TableMask gm = rank_space_[rest] | (TableMask{1} << g);
    rank_space_[rho] = gm;
    const bool ok = scratch_[rest] && (rest == 0 || (tables_.divisors(gm) & below_[g]) == 0);
    scratch_[rho] = ok ? 1 : 0;
    critical[gm] = scratch_[rho];
  }
}

void OrderClassifier::compute_local(TableMask s) {
  const TableMask bridges = tables_.bridges(s);
  TableMask true_gaps = 0;
  for (TableMask m = tables_.gaps(s); m != 0; m &= m - 1) {
    const auto g = static_cast<std::size_t>(std::countr_zero(m));
    const TableMask one = TableMask{1} << g;
    // A new bridge of σ ∪ {m} dominated by m disqualifies m.
    if ((tables_.bridges(s | one) & ~bridges & below_[g]) == 0) true_gaps |= one;
  }
  true_gaps_[s] = true_gaps;
  std::uint8_t flags = 0;
  std::uint8_t sb = kNoBridge;
  if (bridges != 0) sb = static_cast<std::uint8_t>(max_rank_member(bridges));
  if (bridges != 0 || true_gaps != 0) {
    if (bridges == 0) {
      flags = kType1;
    } else if (true_gaps == 0) {
      flags = kPtype2;
    } else {
      // Compare the ≻-smallest true gap with the ≻-smallest bridge.
      const std::size_t stg = max_rank_member(true_gaps);
      flags = rank_[stg] > rank_[sb] ? kType1 : kPtype2;
    }
  }
  flags_[s] = flags;
  sbridge_[s] = sb;
}

std::pair<std::uint8_t, unsigned> OrderClassifier::scan_m_set(TableMask tau, bool stop_at_two) const {
  std::uint8_t smallest = kNoBridge;
  unsigned count = 0;
  for (TableMask m = tables_.gaps(tau); m != 0; m &= m - 1) {
    const auto g = static_cast<std::uint8_t>(std::countr_zero(m));
    const TableMask s = tau | (TableMask{1} << g);
    if ((flags_[s] & kPtype2) && sbridge_[s] == g) {
      ++count;
      if (smallest == kNoBridge || rank_[g] > rank_[smallest]) smallest = g;
      if (stop_at_two && count >= 2) break;
    }
  }
  return {smallest, count};
}

bool OrderClassifier::bridge_friendly_definitional(TableMask* failing_tau) {
  const std::size_t n = tables_.num_subsets();
  for (std::size_t s = n; s-- > 0;) {
    const auto tau = static_cast<TableMask>(s);
    compute_local(tau);
    if (scan_m_set(tau, true).second >= 2) {
      if (failing_tau) *failing_tau = tau;
      return false;
    }
  }
  return true;
}

bool OrderClassifier::bridge_friendly_lemma(TableMask* failing_tau) {
  const std::size_t n = tables_.num_subsets();
  for (std::size_t s = n; s-- > 0;) {
    const auto tau = static_cast<TableMask>(s);
    compute_local(tau);
    if (!(flags_[tau] & kType1)) continue;
    const TableMask tg = true_gaps_[tau];
    const TableMask bridges = tables_.bridges(tau);
    const std::size_t m2 = max_rank_member(tg);
    if (!(flags_[tau | (TableMask{1} << m2)] & kPtype2)) continue;
    const std::size_t sb = bridges != 0 ? max_rank_member(bridges) : c_;
    for (TableMask m = tg & ~(TableMask{1} << m2); m != 0; m &= m - 1) {
      const auto m1 = static_cast<std::size_t>(std::countr_zero(m));
      const bool dominates_no_bridge = sb == c_ || rank_[m1] > rank_[sb];
      if (dominates_no_bridge && (flags_[tau | (TableMask{1} << m1)] & kPtype2)) {
        if (failing_tau) *failing_tau = tau;
        return false;
      }
    }
  }
  return true;
}

void OrderClassifier::classify_barile_macchia() {
  const std::size_t n = tables_.num_subsets();
  for (std::size_t s = 0; s < n; ++s) compute_local(static_cast<TableMask>(s));
  // scratch_[τ] caches 1 + (≻-smallest element of M(τ)), 0 = not computed.
  std::fill(scratch_.begin(), scratch_.end(), 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::uint8_t f = flags_[s];
    if (f & kPtype2) {
      const TableMask tau = static_cast<TableMask>(s) ^ (TableMask{1} << sbridge_[s]);
      if (scratch_[tau] == 0) scratch_[tau] = static_cast<std::uint8_t>(scan_m_set(tau, false).first + 1);
      if (scratch_[tau] - 1 == sbridge_[s]) f |= kType2;
    }
    if (!(f & (kType1 | kType2))) f |= kBmCritical;
    flags_[s] = f;
  }
}

bool OrderClassifier::barile_macchia_matches(const std::vector<std::vector<std::uint64_t>>& betti_by_lcm) {
  const std::size_t n = tables_.num_subsets();
  for (std::size_t s = 0; s < n; ++s) compute_local(static_cast<TableMask>(s));
  std::fill(scratch_.begin(), scratch_.end(), 0);
  std::vector<std::vector<std::uint64_t>> counts(tables_.num_lcms(), std::vector<std::uint64_t>(c_ + 1, 0));
  for (std::size_t s = 0; s < n; ++s) {
    const std::uint8_t f = flags_[s];
    if (f & kType1) continue;
    if (f & kPtype2) {
      const TableMask tau = static_cast<TableMask>(s) ^ (TableMask{1} << sbridge_[s]);
      if (scratch_[tau] == 0) scratch_[tau] = static_cast<std::uint8_t>(scan_m_set(tau, false).first + 1);
      if (scratch_[tau] - 1 == sbridge_[s]) continue;
    }
    const std::uint32_t id = tables_.lcm_id(static_cast<TableMask>(s));
    const auto card = static_cast<std::size_t>(std::popcount(static_cast<TableMask>(s)));
    if (++counts[id][card] > betti_by_lcm[id][card]) return false;
  }
  return counts == betti_by_lcm;
}

std::vector<std::vector<std::uint64_t>> betti_by_lcm_id(const SubsetTables& tables, const GradedCounts& betti) {
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  for (std::uint32_t id = 0; id < tables.num_lcms(); ++id) index.emplace(tables.lcm_value(id), id);
  std::vector<std::vector<std::uint64_t>> out(tables.num_lcms(), std::vector<std::uint64_t>(tables.size() + 1, 0));
  for (const auto& [key, value] : betti) {
    auto it = index.find(key.degree);
    if (it == index.end() || key.i > tables.size()) {
      throw InvalidArgument("Betti table has an entry outside the lcm lattice of the ideal");
    }
    out[it->second][key.i] = value;
  }
  return out;
}

}  // namespace morsecell
