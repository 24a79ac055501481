#include "morsecell/search.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

#include "morsecell/error.hpp"

namespace morsecell {

namespace {

constexpr std::size_t kMaxSymmetryVars = 10;

// Fixed independently of the worker count so that chunk boundaries, and
// therefore every reported number, are the same for any --jobs.
constexpr std::uint64_t kChunkSize = 2048;

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<Exponent> column(const MonomialIdeal& ideal, std::size_t var) {
  std::vector<Exponent> out;
  for (const auto& g : ideal.gens()) out.push_back(g[var]);
  std::sort(out.begin(), out.end());
  return out;
}

struct SymmetrySearch {
  const MonomialIdeal& ideal;
  std::vector<std::vector<Exponent>> columns;
  std::vector<std::size_t> image;
  std::vector<bool> used;
  std::set<std::vector<GenIndex>> found;

  void run(std::size_t var) {
    const std::size_t n = ideal.num_vars();
    if (var == n) {
      record();
      return;
    }
    for (std::size_t target = 0; target < n; ++target) {
      if (used[target] || columns[target] != columns[var]) continue;
      used[target] = true;
      image[var] = target;
      run(var + 1);
      used[target] = false;
    }
  }

  void record() {
    std::vector<GenIndex> perm(ideal.size());
    for (std::size_t g = 0; g < ideal.size(); ++g) {
      Monomial moved(ideal.num_vars());
      for (std::size_t v = 0; v < ideal.num_vars(); ++v) moved.set(image[v], ideal.gen(g)[v]);
      const auto idx = ideal.index_of(moved);
      if (!idx) return;
      perm[g] = static_cast<GenIndex>(*idx);
    }
    found.insert(std::move(perm));
  }
};

// Some symmetry maps `ranking` to a lexicographically smaller ranking.
bool is_non_canonical(std::span<const GenIndex> ranking, const std::vector<std::vector<GenIndex>>& syms) {
  for (const auto& s : syms) {
    for (std::size_t r = 0; r < ranking.size(); ++r) {
      const GenIndex moved = s[ranking[r]];
      if (moved < ranking[r]) return true;
      if (moved > ranking[r]) break;
    }
  }
  return false;
}

struct ChunkResult {
  std::uint64_t evaluated = 0;  // up to and including the witness, if any
  std::uint64_t pruned = 0;
  std::optional<std::uint64_t> witness_rank;
};

}  // namespace

std::vector<std::vector<GenIndex>> symmetries(const MonomialIdeal& ideal) {
  if (ideal.num_vars() > kMaxSymmetryVars) {
    throw CapExceeded("symmetry detection is limited to " + std::to_string(kMaxSymmetryVars) + " variables");
  }
  SymmetrySearch search{ideal, {}, std::vector<std::size_t>(ideal.num_vars()),
                        std::vector<bool>(ideal.num_vars(), false), {}};
  for (std::size_t v = 0; v < ideal.num_vars(); ++v) search.columns.push_back(column(ideal, v));
  search.run(0);
  return {search.found.begin(), search.found.end()};
}

std::string to_string(SearchResult result) {
  switch (result) {
    case SearchResult::witness_found:
      return "witness_found";
    case SearchResult::exhausted_negative:
      return "exhausted_negative";
    case SearchResult::budget_exceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

std::vector<GenIndex> unrank_permutation(std::uint64_t rank, std::size_t size) {
  std::vector<GenIndex> pool(size);
  std::iota(pool.begin(), pool.end(), GenIndex{0});
  std::vector<GenIndex> out;
  out.reserve(size);
  for (std::size_t k = size; k > 0; --k) {
    const std::uint64_t f = factorial(k - 1);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

std::uint64_t rank_permutation(std::span<const GenIndex> perm) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::uint64_t smaller_later = 0;
    for (std::size_t j = i + 1; j < perm.size(); ++j) smaller_later += perm[j] < perm[i] ? 1 : 0;
    rank += smaller_later * factorial(perm.size() - 1 - i);
  }
  return rank;
}

SearchOutcome search_orders(const MonomialIdeal& ideal, const OrderPredicate& predicate,
                            const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t c = ideal.size();
  if (c > kMaxSearchGens) {
    throw CapExceeded("order search is limited to " + std::to_string(kMaxSearchGens) + " generators");
  }
  const SubsetTables tables(ideal);
  std::vector<std::vector<GenIndex>> syms;
  if (options.use_symmetry) {
    syms = symmetries(ideal);
    syms.erase(syms.begin());  // identity
  }
  const std::uint64_t total = factorial(c);
  const std::uint64_t num_chunks = (total + kChunkSize - 1) / kChunkSize;
  const std::uint64_t budget = options.budget.value_or(UINT64_MAX);

  std::mutex lock;
  std::vector<std::optional<ChunkResult>> results(num_chunks);
  std::uint64_t next_chunk = 0;
  std::uint64_t settled = 0;       // chunks [0, settled) are combined
  std::uint64_t settled_eval = 0;  // evaluations in those chunks
  std::uint64_t witness_chunk = num_chunks;
  bool stop = false;

  // Advances the settled prefix; stops once it decides the outcome.
  auto settle = [&] {
    while (settled < num_chunks && results[settled]) {
      const ChunkResult& r = *results[settled];
      if (r.witness_rank || settled_eval + r.evaluated > budget) {
        stop = true;
        return;
      }
      settled_eval += r.evaluated;
      ++settled;
    }
  };

  auto worker = [&] {
    OrderClassifier classifier(tables);
    while (true) {
      std::uint64_t chunk = 0;
      {
        std::lock_guard<std::mutex> guard(lock);
        if (stop || next_chunk >= num_chunks || next_chunk > witness_chunk) return;
        chunk = next_chunk++;
      }
      ChunkResult out;
      const std::uint64_t first = chunk * kChunkSize;
      const std::uint64_t last = std::min(total, first + kChunkSize);
      std::vector<GenIndex> perm = unrank_permutation(first, c);
      for (std::uint64_t rank = first; rank < last; ++rank) {
        if (rank != first) std::next_permutation(perm.begin(), perm.end());
        if (!syms.empty() && is_non_canonical(perm, syms)) {
          ++out.pruned;
          continue;
        }
        // Past this point the chunk cannot change the combined outcome.
        if (out.evaluated > budget) break;
        ++out.evaluated;
        classifier.set_order(perm);
        if (predicate(classifier)) {
          out.witness_rank = rank;
          break;
        }
      }
      std::lock_guard<std::mutex> guard(lock);
      results[chunk] = out;
      if (out.witness_rank) witness_chunk = std::min(witness_chunk, chunk);
      settle();
    }
  };

  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  SearchOutcome outcome;
  outcome.stats.examined = settled_eval;
  std::uint64_t pruned = 0;
  for (std::uint64_t k = 0; k < settled; ++k) pruned += results[k]->pruned;
  if (settled == num_chunks) {
    outcome.result = SearchResult::exhausted_negative;
  } else {
    const ChunkResult& r = *results[settled];
    if (r.witness_rank && settled_eval + r.evaluated <= budget) {
      outcome.result = SearchResult::witness_found;
      outcome.witness_rank = r.witness_rank;
      outcome.witness = TotalOrder(unrank_permutation(*r.witness_rank, c));
      outcome.stats.examined += r.evaluated;
      pruned += r.pruned;
    } else {
      // Replay the deciding chunk without the predicate to count exactly
      // what a single sequential pass would have skipped before stopping.
      outcome.result = SearchResult::budget_exceeded;
      const std::uint64_t first = settled * kChunkSize;
      const std::uint64_t last = std::min(total, first + kChunkSize);
      std::uint64_t evaluated = settled_eval;
      std::vector<GenIndex> perm = unrank_permutation(first, c);
      for (std::uint64_t rank = first; rank < last; ++rank) {
        if (rank != first) std::next_permutation(perm.begin(), perm.end());
        if (!syms.empty() && is_non_canonical(perm, syms)) {
          ++pruned;
          continue;
        }
        if (evaluated == budget) break;
        ++evaluated;
      }
      outcome.stats.examined = budget;
    }
  }
  outcome.stats.pruned = pruned;
  outcome.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

SearchOutcome exists_lyubeznik_order(const MonomialIdeal& ideal, const SearchOptions& options) {
  return search_orders(
      ideal, [](OrderClassifier& cls) { return cls.lyubeznik_minimal(); }, options);
}

SearchOutcome exists_bf_order(const MonomialIdeal& ideal, const SearchOptions& options) {
  return search_orders(
      ideal, [](OrderClassifier& cls) { return cls.bridge_friendly_definitional(); }, options);
}

SearchOutcome exists_minimal_bm_order(const MonomialIdeal& ideal, const SearchOptions& options) {
  const SubsetTables tables(ideal);
  const auto betti = betti_by_lcm_id(tables, betti_table(ideal).counts);
  return search_orders(
      ideal, [&betti](OrderClassifier& cls) { return cls.barile_macchia_matches(betti); }, options);
}

RestrictionSpec::RestrictionSpec(const MonomialIdeal& parent, Monomial m, Monomial f, MonomialIdeal sub,
                                 std::set<Monomial> feasible_min_of_sub)
    : m_(std::move(m)), f_(std::move(f)), sub_(std::move(sub)), feasible_(std::move(feasible_min_of_sub)) {
  const auto restricted = try_hhz_subideal(parent, m_);
  if (!restricted || *restricted != scale(f_, sub_)) {
    throw InvalidArgument("restriction of the ideal to " + to_string(m_) + " is not " + to_string(f_) +
                          " times the given subideal");
  }
  for (const auto& g : feasible_) {
    if (!sub_.index_of(g)) throw InvalidArgument("feasible minimum " + to_string(g) + " is not a generator");
  }
}

std::set<Monomial> bf_minima_brute_force(const MonomialIdeal& ideal) {
  const std::size_t c = ideal.size();
  if (c > kMaxSearchGens) {
    throw CapExceeded("order search is limited to " + std::to_string(kMaxSearchGens) + " generators");
  }
  const SubsetTables tables(ideal);
  OrderClassifier classifier(tables);
  std::set<Monomial> out;
  // For each candidate minimum, walk the orders of the remaining
  // generators until one is bridge-friendly.
  for (std::size_t g = 0; g < c; ++g) {
    std::vector<GenIndex> rest;
    for (std::size_t h = 0; h < c; ++h) {
      if (h != g) rest.push_back(static_cast<GenIndex>(h));
    }
    std::vector<GenIndex> perm(c);
    do {
      std::copy(rest.begin(), rest.end(), perm.begin());
      perm[c - 1] = static_cast<GenIndex>(g);
      classifier.set_order(perm);
      if (classifier.bridge_friendly_definitional()) {
        out.insert(ideal.gen(g));
        break;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

std::set<Monomial> feasible_min_bf(const MonomialIdeal& ideal, const std::vector<RestrictionSpec>& restrictions,
                                   bool brute_force) {
  if (brute_force) return bf_minima_brute_force(ideal);
  std::set<Monomial> out;
  for (const auto& g : ideal.gens()) {
    bool feasible = true;
    for (const auto& spec : restrictions) {
      if (!divides(g, spec.m())) continue;
      const auto reduced = quotient(g, spec.f());
      if (!reduced) {
        throw InvalidArgument("restriction to " + to_string(spec.m()) + " is inconsistent: " + to_string(spec.f()) +
                              " does not divide " + to_string(g));
      }
      if (!spec.feasible_min_of_sub().contains(*reduced)) {
        feasible = false;
        break;
      }
    }
    if (feasible) out.insert(g);
  }
  return out;
}

}  // namespace morsecell
