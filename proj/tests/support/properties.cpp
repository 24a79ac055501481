#include "properties.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "morsecell/betti.hpp"
#include "morsecell/critical.hpp"
#include "oracles.hpp"

namespace proptest {

using namespace morsecell;

bool PropertyReport::clean() const {
  return std::all_of(tallies.begin(), tallies.end(), [](const PropertyTally& t) { return t.violations == 0; });
}

namespace {

class Tallies {
 public:
  explicit Tallies(PropertyReport& report) : report_(report) {}

  void check(const std::string& name, bool ok, const std::string& context) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, report_.tallies.size()).first;
      report_.tallies.push_back({name, 0, 0, ""});
    }
    auto& t = report_.tallies[it->second];
    ++t.checks;
    if (!ok && t.violations++ == 0) t.first_counterexample = context;
  }

 private:
  PropertyReport& report_;
  std::map<std::string, std::size_t> index_;
};

std::string describe(const MonomialIdeal& ideal, const TotalOrder& order) {
  std::ostringstream out;
  out << "gens [";
  for (std::size_t g = 0; g < ideal.size(); ++g) out << (g ? ", " : "") << to_string(ideal.gen(g));
  out << "] order [";
  for (std::size_t r = 0; r < order.size(); ++r) out << (r ? ", " : "") << to_string(ideal.gen(order.ranking()[r]));
  out << "]";
  return out.str();
}

std::map<std::pair<int, oracle::Exps>, long> as_plain(const GradedCounts& counts) {
  std::map<std::pair<int, oracle::Exps>, long> out;
  for (const auto& [key, value] : counts) {
    out[{static_cast<int>(key.i), oracle::Exps(key.degree.exponents().begin(), key.degree.exponents().end())}] =
        static_cast<long>(value);
  }
  return out;
}

// m and m2 both have exponent exactly n in some variable where every other
// member of sigma has exponent below n.
bool share_unique_factor(const MonomialIdeal& ideal, GenMask sigma, std::size_t m, std::size_t m2) {
  const Monomial& a = ideal.gen(m);
  const Monomial& b = ideal.gen(m2);
  for (std::size_t v = 0; v < ideal.num_vars(); ++v) {
    const int n = a[v];
    if (n == 0 || b[v] != n) continue;
    bool unique = true;
    for (auto o : mask_members(sigma & ~bit(m) & ~bit(m2))) {
      if (ideal.gen(o)[v] >= n) unique = false;
    }
    if (unique) return true;
  }
  return false;
}

Monomial random_restriction_monomial(std::mt19937_64& rng, const MonomialIdeal& ideal) {
  const Monomial top = ideal.lcm_of_mask(ideal.all());
  for (;;) {
    if (rng() % 2 == 0) {
      const GenMask mask = 1 + rng() % ideal.all();
      return ideal.lcm_of_mask(mask);
    }
    Monomial m(ideal.num_vars());
    for (std::size_t v = 0; v < ideal.num_vars(); ++v) m.set(v, static_cast<int>(rng() % (top[v] + 1U)));
    if (ideal.divisors_of(m) != 0) return m;
  }
}

void check_pair(const MonomialIdeal& ideal, const TotalOrder& order, std::mt19937_64& rng, Tallies& t,
                PropertyReport& report) {
  const std::string ctx = describe(ideal, order);
  const auto plain = oracle::gens_of(ideal);
  const oracle::Ranking ranking(order.ranking().begin(), order.ranking().end());
  const GenMask all = ideal.all();

  const BettiTable betti = betti_table(ideal);
  const CellTable lyu = critical_cells(ideal, order, Family::lyubeznik);
  const CellTable bm = critical_cells(ideal, order, Family::barile_macchia);

  t.check("betti table matches Koszul-complex oracle", as_plain(betti.counts) == oracle::koszul_betti(plain), ctx);
  for (const CellTable* cells : {&lyu, &bm}) {
    const std::string fam = to_string(cells->family);
    t.check("Euler identity (" + fam + ")", euler_check(*cells, betti), ctx);
    bool dominates = true;
    for (const auto& [key, value] : betti.counts) dominates = dominates && count_at(cells->counts, key) >= value;
    t.check("cell ranks bound Betti numbers (" + fam + ")", dominates, ctx);
  }

  // Per-subset classification against the definitional oracle.
  const auto classes = oracle::bm_classes(plain, ranking);
  bool bm_agree = true;
  bool lyu_agree = true;
  bool lyu_closed = true;
  for (GenMask s = 0; s <= all; ++s) {
    const TypeVerdict v = subset_type(ideal, order, s);
    const auto& o = classes[s];
    bm_agree = bm_agree && v.type1 == o.type1 && v.ptype2 == o.ptype2 && v.type2 == o.type2 &&
               v.bm_critical == o.critical();
    std::vector<int> members;
    for (auto g : mask_members(s)) members.push_back(static_cast<int>(g));
    const bool crit = is_lyubeznik_critical(ideal, order, s);
    lyu_agree = lyu_agree && crit == oracle::lyubeznik_critical(plain, ranking, members);
    if (crit) {
      for (auto g : mask_members(s)) lyu_closed = lyu_closed && is_lyubeznik_critical(ideal, order, s & ~bit(g));
    }
  }
  t.check("subset types match definitional oracle", bm_agree, ctx);
  t.check("Lyubeznik criticality matches prefix oracle", lyu_agree, ctx);
  t.check("Lyubeznik-critical family closed under subsets", lyu_closed, ctx);
  t.check("cell tables match oracle counts (lyubeznik)",
          as_plain(lyu.counts) == oracle::cell_counts(plain, [&](std::uint64_t, const oracle::Subset& s) {
            return oracle::lyubeznik_critical(plain, ranking, s);
          }),
          ctx);
  t.check("cell tables match oracle counts (barile-macchia)",
          as_plain(bm.counts) ==
              oracle::cell_counts(plain, [&](std::uint64_t mask, const oracle::Subset&) { return classes[mask].critical(); }),
          ctx);

  // Smallest-bridge characterisation of true gaps, witness factors, and the
  // sufficient condition for a true gap.
  bool sbridge_equiv = true;
  bool witness_factor = true;
  bool witness_valid = true;
  bool sufficiency = true;
  for (GenMask s = 0; s <= all; ++s) {
    const SubsetAnalysis a = analyze_subset(ideal, order, s);
    for (std::size_t m = 0; m < ideal.size(); ++m) {
      if (s & bit(m)) continue;
      const bool is_gap = (a.gaps & bit(m)) != 0;
      const bool is_true = (a.true_gaps & bit(m)) != 0;
      const SubsetAnalysis up = analyze_subset(ideal, order, s | bit(m));
      const bool lhs = is_gap && up.sbridge == m;
      const bool rhs = is_true && (a.bridges & order.dominated_by(m)) == 0;
      sbridge_equiv = sbridge_equiv && lhs == rhs;
      if (!is_gap) continue;
      if (!is_true) {
        const auto it = a.witnesses.find(m);
        if (it == a.witnesses.end()) {
          witness_valid = false;
          continue;
        }
        const std::size_t w = it->second;
        const GenMask fresh = up.bridges & ~a.bridges & order.dominated_by(m);
        witness_valid = witness_valid && fresh != 0 && w == order.smallest(fresh);
        witness_factor = witness_factor && share_unique_factor(ideal, s, m, w);
      }
      GenMask support = 0;
      for (auto m2 : mask_members(s)) {
        if (order.dominates(m2, m) || !share_unique_factor(ideal, s, m, m2)) support |= bit(m2);
      }
      if (divides(ideal.gen(m), ideal.lcm_of_mask(support))) sufficiency = sufficiency && is_true;
    }
  }
  t.check("gap with smallest bridge m iff true gap dominating no bridge", sbridge_equiv, ctx);
  t.check("non-true-gap witness is the smallest new bridge", witness_valid, ctx);
  t.check("gap and witness share a unique factor", witness_factor, ctx);
  t.check("unique-factor condition forces a true gap", sufficiency, ctx);

  // Bridge-friendliness: both algorithms, the oracle, and its consequences.
  const bool bf_def = is_bridge_friendly(ideal, order, BridgeFriendlyAlgorithm::definitional);
  const bool bf_lemma = is_bridge_friendly(ideal, order, BridgeFriendlyAlgorithm::lemma);
  t.check("bridge-friendliness algorithms agree", bf_def == bf_lemma, ctx);
  t.check("bridge-friendliness matches definitional oracle", bf_def == oracle::bridge_friendly(plain, ranking), ctx);
  if (bf_def) {
    t.check("bridge-friendly implies minimal Barile-Macchia cells", minimality_verdict(bm, betti).minimal, ctx);
    bool exact = true;
    for (GenMask s = 0; s <= all; ++s) {
      const SubsetAnalysis a = analyze_subset(ideal, order, s);
      exact = exact && classes[s].critical() == (a.bridges == 0 && a.true_gaps == 0);
    }
    t.check("bridge-friendly critical sets have no bridges or true gaps", exact, ctx);
  }
  const LyubeznikVerdict lv = lyubeznik_minimal(ideal, order);
  if (lv.minimal != minimality_verdict(lyu, betti).minimal) ++report.lyubeznik_criterion_findings;

  // Restriction to I^{<=m} under the induced order.
  const Monomial m = random_restriction_monomial(rng, ideal);
  const MonomialIdeal sub = hhz_subideal(ideal, m);
  const TotalOrder sub_order = induced_order(ideal, order, sub);
  std::vector<std::size_t> to_parent(sub.size());
  for (std::size_t g = 0; g < sub.size(); ++g) to_parent[g] = *ideal.index_of(sub.gen(g));
  bool restrict_bm = true;
  bool restrict_lyu = true;
  for (GenMask s = 0; s <= sub.all(); ++s) {
    GenMask lifted = 0;
    for (auto g : mask_members(s)) lifted |= bit(to_parent[g]);
    restrict_bm = restrict_bm && subset_type(sub, sub_order, s).bm_critical == classes[lifted].critical();
    restrict_lyu = restrict_lyu && is_lyubeznik_critical(sub, sub_order, s) == is_lyubeznik_critical(ideal, order, lifted);
  }
  // A parent subset has lcm dividing m exactly when it lifts from the
  // restriction, so the loop above covers both sides.
  const std::string rctx = ctx + " m " + to_string(m);
  t.check("restriction preserves Barile-Macchia-critical sets", restrict_bm, rctx);
  t.check("restriction preserves Lyubeznik-critical sets", restrict_lyu, rctx);
  GradedCounts expected;
  for (const auto& [key, value] : betti.counts) {
    if (divides(key.degree, m)) expected[key] = value;
  }
  t.check("restriction preserves Betti numbers below m", betti_table(sub).counts == expected, rctx);

  // Scaling by a random monomial keeps the generator order and every verdict.
  Monomial f(ideal.num_vars());
  for (std::size_t v = 0; v < ideal.num_vars(); ++v) f.set(v, static_cast<int>(rng() % 4));
  const MonomialIdeal scaled = scale(f, ideal);
  bool same_index = scaled.size() == ideal.size();
  for (std::size_t g = 0; same_index && g < ideal.size(); ++g) same_index = scaled.gen(g) == ideal.gen(g) * f;
  bool scaled_same = same_index;
  for (GenMask s = 0; scaled_same && s <= all; ++s) {
    scaled_same = subset_type(scaled, order, s) == subset_type(ideal, order, s) &&
                  is_lyubeznik_critical(scaled, order, s) == is_lyubeznik_critical(ideal, order, s);
  }
  scaled_same = scaled_same && is_bridge_friendly(scaled, order) == bf_def;
  t.check("scaling preserves critical sets and bridge-friendliness", scaled_same, ctx + " f " + to_string(f));
}

}  // namespace

PropertyReport run_properties(std::uint64_t pairs, std::uint64_t seed) {
  PropertyReport report;
  Tallies tallies(report);
  std::mt19937_64 rng(seed);
  for (std::uint64_t k = 0; k < pairs; ++k) {
    const MonomialIdeal ideal = oracle::random_ideal(rng, 6, 5, 3);
    std::vector<GenIndex> ranking(ideal.size());
    std::iota(ranking.begin(), ranking.end(), GenIndex{0});
    std::shuffle(ranking.begin(), ranking.end(), rng);
    check_pair(ideal, TotalOrder(ranking), rng, tallies, report);
    ++report.pairs;
  }
  return report;
}

}  // namespace proptest
