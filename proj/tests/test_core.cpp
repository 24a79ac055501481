#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "morsecell/error.hpp"
#include "morsecell/graph.hpp"
#include "morsecell/ideal.hpp"
#include "morsecell/order.hpp"
#include "oracles.hpp"

using namespace morsecell;
using testing_support::named_ideal;

TEST_CASE("monomial arithmetic") {
  const Monomial a{2, 0, 1};
  const Monomial b{1, 3, 0};
  CHECK(lcm(a, b) == Monomial{2, 3, 1});
  CHECK(gcd(a, b) == Monomial{1, 0, 0});
  CHECK(a * b == Monomial{3, 3, 1});
  CHECK(divides(Monomial{1, 0, 1}, a));
  CHECK_FALSE(divides(b, a));
  CHECK(quotient(a, Monomial{1, 0, 1}) == Monomial{1, 0, 0});
  CHECK_FALSE(quotient(a, b).has_value());
  CHECK(a.degree() == 3);
  CHECK(Monomial(3).is_unit());
  CHECK(to_string(a) == "x1^2*x3");
  CHECK(to_string(Monomial(2)) == "1");
  CHECK_THROWS_AS(divides(Monomial{1}, Monomial{1, 1}), AmbientMismatch);
}

TEST_CASE("monomial parsing") {
  const std::vector<std::string> vars{"x1", "x2", "x3", "x4"};
  CHECK(parse_monomial("x1^2*x2*x4", vars) == Monomial{2, 1, 0, 1});
  CHECK(parse_monomial(" x3 * x3 ", vars) == Monomial{0, 0, 2, 0});
  CHECK(parse_monomial("1", vars).is_unit());
  CHECK_THROWS_AS(parse_monomial("x5", vars), ParseError);
  CHECK_THROWS_AS(parse_monomial("x1^", vars), ParseError);
  CHECK_THROWS_AS(parse_monomial("", vars), ParseError);
}

TEST_CASE("minimalize keeps minimal generators in canonical order") {
  const auto I = MonomialIdeal::minimalize({Monomial{1, 1}, Monomial{2, 1}, Monomial{1, 1}, Monomial{0, 3}});
  REQUIRE(I.size() == 2);
  CHECK(I.gen(0) == Monomial{1, 1});
  CHECK(I.gen(1) == Monomial{0, 3});
  CHECK(MonomialIdeal::minimalize(I.gens()) == I);
  CHECK_THROWS_AS(MonomialIdeal::minimalize({}), ZeroIdeal);

  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const auto J = oracle::random_ideal(rng, 8, 4, 3);
    CHECK(MonomialIdeal::minimalize(J.gens()) == J);
    for (std::size_t g = 0; g + 1 < J.size(); ++g) CHECK(J.gen(g) > J.gen(g + 1));
  }
}

TEST_CASE("powers, scaling and restriction") {
  const auto xy = named_ideal({"x", "y"}, {"x", "y"});
  CHECK(power(xy.ideal, 2).size() == 3);
  CHECK(power(xy.ideal, 5).size() == 6);
  CHECK_THROWS(power(xy.ideal, 0));

  const auto scaled = scale(Monomial{1, 1}, xy.ideal);
  CHECK(scaled.gen(0) == Monomial{2, 1});
  CHECK(scaled.gen(1) == Monomial{1, 2});

  const auto c4 = testing_support::c4();
  const auto sub = hhz_subideal(c4.ideal, testing_support::mono("w*x*y", c4));
  CHECK(sub.size() == 2);
  CHECK_THROWS_AS(hhz_subideal(c4.ideal, testing_support::mono("w*y", c4)), ZeroIdeal);
  CHECK_FALSE(try_hhz_subideal(c4.ideal, testing_support::mono("w*y", c4)).has_value());

  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const auto I = oracle::random_ideal(rng, 4, 3, 2);
    for (unsigned a = 1; a <= 2; ++a) {
      for (unsigned b = 1; b <= 2; ++b) {
        const auto big = power(I, a + b);
        const auto small = power(I, a);
        for (const auto& g : big.gens()) CHECK(small.divisors_of(g) != 0);
      }
    }
    // Restricting twice equals restricting by the smaller monomial.
    const Monomial m = I.lcm_of_mask(I.all());
    const Monomial m2 = I.lcm_of_mask(1);
    const auto once = try_hhz_subideal(I, m2);
    const auto twice = try_hhz_subideal(hhz_subideal(I, m), m2);
    REQUIRE(once.has_value());
    CHECK(*once == *twice);
  }
}

TEST_CASE("lcm lattice") {
  const auto xy = named_ideal({"x", "y"}, {"x", "y"});
  CHECK(lcm_lattice(xy.ideal).size() == 3);
  CHECK(lcm_lattice(testing_support::c4().ideal).size() == 9);
  CHECK(lcm_lattice(named_ideal({"x*y"}, {"x", "y"}).ideal).size() == 1);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    const auto I = oracle::random_ideal(rng, 10, 5, 3);
    const auto plain = oracle::gens_of(I);
    std::set<oracle::Exps> brute;
    for (GenMask s = 1; s <= I.all(); ++s) {
      oracle::Subset members;
      for (auto g : mask_members(s)) members.push_back(static_cast<int>(g));
      brute.insert(oracle::lcm(plain, members, I.num_vars()));
    }
    std::set<oracle::Exps> lattice;
    for (const auto& b : lcm_lattice(I)) lattice.emplace(b.exponents().begin(), b.exponents().end());
    CHECK(lattice == brute);
  }
}

TEST_CASE("multiples of a lower power sit inside a higher power as a restriction") {
  // (graph, f, m(n)) from the constructions for P4, C3 and C4.
  struct Case {
    const char* graph;
    std::vector<int> f;
    std::vector<int> m_coeff;  // exponent of m is n * m_coeff + m_const
    std::vector<int> m_const;
  };
  const std::vector<Case> cases = {
      {"P4", {0, 0, 1, 1}, {1, 1, 1, 1}, {1, 0, 1, 1}},
      {"C3", {1, 0, 1}, {1, 1, 1}, {1, 0, 1}},
      {"C4", {1, 0, 0, 1}, {1, 1, 1, 1}, {1, 0, 0, 1}},
  };
  for (const auto& c : cases) {
    const auto I = edge_ideal(build_from_name(c.graph));
    for (int n = 1; n <= 3; ++n) {
      std::vector<int> m(c.m_coeff.size());
      for (std::size_t v = 0; v < m.size(); ++v) m[v] = n * c.m_coeff[v] + c.m_const[v];
      const Monomial f(std::span<const int>(c.f));
      CHECK(hhz_subideal(power(I, n + 1), Monomial(std::span<const int>(m))) == scale(f, power(I, n)));
    }
  }
}

TEST_CASE("total orders") {
  const auto c4 = testing_support::c4();
  const auto ord = testing_support::c4_order(c4);
  const auto wx = *c4.ideal.index_of(testing_support::mono("w*x", c4));
  const auto zw = *c4.ideal.index_of(testing_support::mono("z*w", c4));
  CHECK(ord.ranking()[0] == wx);
  CHECK(ord.dominates(wx, zw));
  CHECK(ord.smallest(c4.ideal.all()) == zw);
  CHECK(ord.largest(c4.ideal.all()) == wx);
  CHECK(ord.dominated_by(zw) == 0);
  CHECK_THROWS_AS(TotalOrder({0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(parse_order("w*x,x*y,y*z", c4), InvalidArgument);
  CHECK_THROWS_AS(TotalOrder::identity(3).check_bound_to(c4.ideal), InvalidArgument);

  const auto sub = hhz_subideal(c4.ideal, testing_support::mono("w*x*y", c4));
  const auto induced = induced_order(c4.ideal, ord, sub);
  CHECK(sub.gen(induced.ranking()[0]) == testing_support::mono("w*x", c4));
}
