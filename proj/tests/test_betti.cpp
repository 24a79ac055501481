#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "morsecell/betti.hpp"
#include "morsecell/error.hpp"
#include "oracles.hpp"

using namespace morsecell;

namespace {

Gf2Matrix matrix(const std::vector<std::vector<int>>& rows) {
  Gf2Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c] != 0);
  }
  return m;
}

std::map<std::pair<int, oracle::Exps>, long> plain(const GradedCounts& counts) {
  std::map<std::pair<int, oracle::Exps>, long> out;
  for (const auto& [key, value] : counts) {
    out[{static_cast<int>(key.i), oracle::Exps(key.degree.exponents().begin(), key.degree.exponents().end())}] =
        static_cast<long>(value);
  }
  return out;
}

}  // namespace

TEST_CASE("rank over GF(2)") {
  CHECK(gf2_rank(matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(gf2_rank(Gf2Matrix(4, 5)) == 0);
  CHECK(gf2_rank(matrix({{1, 1}, {1, 1}})) == 1);
  CHECK(gf2_rank(matrix({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);

  Gf2Matrix wide(3, 130);
  wide.set(0, 129);
  wide.set(1, 64);
  wide.set(2, 129);
  wide.set(2, 64);
  CHECK(gf2_rank(wide) == 2);
  wide.flip(2, 64);
  CHECK(gf2_rank(wide) == 2);
  CHECK(wide.get(0, 129));
  CHECK_FALSE(wide.get(2, 64));
}

TEST_CASE("Betti tables of small ideals") {
  const auto x = testing_support::named_ideal({"x"}, {"x"});
  CHECK(totals_by_degree(betti_table(x.ideal).counts) == std::vector<std::uint64_t>{1, 1});
  const auto p3 = testing_support::named_ideal({"x*y", "y*z"}, {"x", "y", "z"});
  CHECK(totals_by_degree(betti_table(p3.ideal).counts) == std::vector<std::uint64_t>{1, 2, 1});
  const auto c4 = testing_support::c4();
  const auto betti = betti_table(c4.ideal);
  CHECK(totals_by_degree(betti.counts) == std::vector<std::uint64_t>{1, 4, 4, 1});
  CHECK(count_at(betti.counts, {0, Monomial(4)}) == 1);
}

TEST_CASE("Betti tables match the Koszul-complex oracle") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 150; ++k) {
    const auto I = oracle::random_ideal(rng, 8, 4, 3);
    const auto betti = betti_table(I);
    CHECK(plain(betti.counts) == oracle::koszul_betti(oracle::gens_of(I)));
    std::uint64_t first = 0;
    for (const auto& [key, value] : betti.counts) {
      if (key.i == 1) {
        first += value;
        CHECK(I.index_of(key.degree).has_value());
      }
    }
    CHECK(first == I.size());
  }
}

TEST_CASE("minimality verdicts") {
  const auto c4 = testing_support::c4();
  const auto ord = testing_support::c4_order(c4);
  const auto betti = betti_table(c4.ideal);
  const auto lyu = critical_cells(c4.ideal, ord, Family::lyubeznik);
  const auto verdict = minimality_verdict(lyu, betti);
  CHECK_FALSE(verdict.minimal);
  REQUIRE(verdict.discrepancy.has_value());
  CHECK(verdict.discrepancy->i == 2);
  CHECK(verdict.cells_value > verdict.betti_value);
  CHECK(euler_check(lyu, betti));

  const auto xy = testing_support::named_ideal({"x", "y"}, {"x", "y"});
  CHECK(minimality_verdict(critical_cells(xy.ideal, TotalOrder({0, 1}), Family::lyubeznik), betti_table(xy.ideal)).minimal);
  CHECK_THROWS_AS(minimality_verdict(lyu, betti_table(xy.ideal)), InvalidArgument);

  // Taylor cells satisfy the Euler identity for any ideal.
  std::mt19937_64 rng(8);
  for (int k = 0; k < 50; ++k) {
    const auto I = oracle::random_ideal(rng, 6, 4, 2);
    CellTable taylor{Family::lyubeznik, I.fingerprint(), {}};
    for (GenMask s = 0; s <= I.all(); ++s) ++taylor.counts[{static_cast<unsigned>(std::popcount(s)), I.lcm_of_mask(s)}];
    CHECK(euler_check(taylor, betti_table(I)));
  }
}

TEST_CASE("square of the triangle ideal") {
  const auto c3 = named_edge_ideal(build_from_name("C3"));
  const NamedIdeal sq{power(c3.ideal, 2), c3.vars};
  const auto ord = parse_order("x2^2*x3^2,x1*x2^2*x3,x1^2*x2^2,x1*x2*x3^2,x1^2*x3^2,x1^2*x2*x3", sq);
  CHECK(is_bridge_friendly(sq.ideal, ord));
  CHECK(minimality_verdict(critical_cells(sq.ideal, ord, Family::barile_macchia), betti_table(sq.ideal)).minimal);
}
