#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "waring/monomials.hpp"

using waring::Monomial;
using waring::Natural;

namespace {

Monomial mono(std::vector<unsigned> e, unsigned n = 0) {
  return Monomial::canonicalize(e, n == 0 ? static_cast<unsigned>(e.size()) : n);
}

std::vector<unsigned> exps(const Monomial& m) { return {m.exponents().begin(), m.exponents().end()}; }

}  // namespace

TEST_CASE("canonicalize drops zeros and sorts") {
  const Monomial m = mono({0, 2, 1, 0}, 4);
  CHECK(exps(m) == std::vector<unsigned>{1, 2});
  CHECK(m.ambient_vars() == 4);
  CHECK(m.degree() == 3);
  CHECK(m.variables_used() == 2);
  CHECK(exps(mono({1, 1, 1, 1}, 4)) == std::vector<unsigned>{1, 1, 1, 1});
  CHECK(mono({3, 1}, 4) == mono({1, 0, 3, 0}, 4));
  CHECK(m.to_string() == "1,2");
  CHECK(m.to_expression() == "x1*x2^2");
}

TEST_CASE("canonicalize errors") {
  CHECK_THROWS_AS(mono({0, 0}, 2), waring::DegenerateInput);
  CHECK_THROWS_AS(mono({}, 2), waring::DegenerateInput);
  CHECK_THROWS_AS(mono({1, 1, 1}, 2), waring::DimensionError);
  const std::vector<unsigned> one{1};
  CHECK_THROWS_AS(Monomial::canonicalize(one, 0), waring::DegenerateInput);
  // Zeros do not count against the ambient dimension.
  CHECK_NOTHROW(mono({1, 0, 0, 1}, 2));
}

TEST_CASE("waring_rank reference values") {
  CHECK(waring::waring_rank(mono({1, 1})) == Natural(2));
  CHECK(waring::waring_rank(mono({1, 1, 1})) == Natural(4));
  CHECK(waring::waring_rank(mono({1, 1, 2})) == Natural(6));
  CHECK(waring::waring_rank(mono({1, 3})) == Natural(4));
  CHECK(waring::waring_rank(mono({2, 2})) == Natural(3));
  CHECK(waring::waring_rank(mono({4})) == Natural(1));
}

TEST_CASE("waring_rank is invariant under permutation and zero padding") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<unsigned> exp_dist(0, 6);
  std::uniform_int_distribution<unsigned> len_dist(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<unsigned> raw(len_dist(rng));
    for (auto& e : raw) e = exp_dist(rng);
    if (std::all_of(raw.begin(), raw.end(), [](unsigned e) { return e == 0; })) raw[0] = 1;
    const unsigned n = static_cast<unsigned>(raw.size()) + 3;
    const Natural r = waring::waring_rank(Monomial::canonicalize(raw, n));
    auto shuffled = raw;
    shuffled.push_back(0);
    shuffled.insert(shuffled.begin(), 0);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    REQUIRE(waring::waring_rank(Monomial::canonicalize(shuffled, n)) == r);
    REQUIRE(Monomial::canonicalize(shuffled, n) == Monomial::canonicalize(raw, n));
    std::vector<unsigned> positive;
    for (unsigned e : raw) {
      if (e != 0) positive.push_back(e);
    }
    REQUIRE(r == Natural(oracle::monomial_rank(positive)));
  }
}

TEST_CASE("max_rank_monomial") {
  const Monomial m44 = waring::max_rank_monomial(4, 4);
  CHECK(exps(m44) == std::vector<unsigned>{1, 1, 1, 1});
  CHECK(waring::waring_rank(m44) == Natural(8));

  const Monomial m35 = waring::max_rank_monomial(3, 5);
  CHECK(exps(m35) == std::vector<unsigned>{1, 2, 2});
  CHECK(waring::waring_rank(m35) == Natural(9));
  CHECK(oracle::max_monomial_rank(3, 5) == 9);

  const Monomial m53 = waring::max_rank_monomial(5, 3);
  CHECK(exps(m53) == std::vector<unsigned>{1, 1, 1});
  CHECK(m53.ambient_vars() == 5);
  CHECK(waring::waring_rank(m53) == Natural(4));

  for (unsigned d = 2; d <= 30; ++d) {
    const Monomial m = waring::max_rank_monomial(d, d);
    REQUIRE(m.variables_used() == d);
    REQUIRE(waring::waring_rank(m) == waring::pow(Natural(2), d - 1));
  }

  CHECK(exps(waring::max_rank_monomial(1, 7)) == std::vector<unsigned>{7});
  CHECK(waring::waring_rank(waring::max_rank_monomial(1, 7)) == Natural(1));
  CHECK_THROWS_AS(waring::max_rank_monomial(3, 0), waring::DegenerateInput);
}

TEST_CASE("max-rank witness is balanced with a_1 = 1") {
  for (unsigned n = 2; n <= 10; ++n) {
    for (unsigned d = 2; d <= 40; ++d) {
      const Monomial m = waring::max_rank_monomial(n, d);
      const auto e = m.exponents();
      REQUIRE(m.degree() == d);
      REQUIRE(m.variables_used() == std::min(n, d));
      REQUIRE(e.front() == 1);
      REQUIRE(e.back() - e[e.size() > 1 ? 1 : 0] <= 1);
    }
  }
}

TEST_CASE("partition stream order") {
  std::vector<std::vector<unsigned>> seen;
  waring::PartitionStream ps(4, 4);
  do {
    const auto cur = ps.current();
    REQUIRE(cur.has_value());
    seen.emplace_back(cur->begin(), cur->end());
  } while (ps.next());
  CHECK(seen == std::vector<std::vector<unsigned>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK_FALSE(ps.current().has_value());
  CHECK_FALSE(ps.next());

  waring::PartitionStream empty(0, 3);
  CHECK_FALSE(empty.current().has_value());
}

TEST_CASE("partition stream agrees with recursive enumeration") {
  for (unsigned d = 1; d <= 22; ++d) {
    for (unsigned n = 1; n <= d + 1; ++n) {
      std::vector<std::vector<unsigned>> got;
      waring::PartitionStream ps(d, n);
      do {
        got.emplace_back(ps.current()->begin(), ps.current()->end());
      } while (ps.next());
      // The recursive oracle also yields descending lexicographic order.
      REQUIRE(got == oracle::all_partitions(d, n));
    }
  }
}

TEST_CASE("enumerate_monomials") {
  CHECK(waring::enumerate_monomials(4, 4).size() == 5);
  CHECK(waring::enumerate_monomials(5, 3).size() == 3);
  const auto two_three = waring::enumerate_monomials(2, 3);
  REQUIRE(two_three.size() == 2);
  CHECK(exps(two_three[0]) == std::vector<unsigned>{3});
  CHECK(exps(two_three[1]) == std::vector<unsigned>{1, 2});

  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned d = 1; d <= 40; ++d) {
      std::set<std::vector<unsigned>> distinct;
      std::uint64_t count = 0;
      waring::for_each_monomial(n, d, [&](const Monomial& m) {
        ++count;
        distinct.insert(exps(m));
        REQUIRE(m.degree() == d);
        REQUIRE(m.ambient_vars() == n);
      });
      REQUIRE(count == oracle::partition_count(d, n));
      REQUIRE(distinct.size() == count);
    }
  }
}

TEST_CASE("r_max closed form agrees with the oracle") {
  CHECK(waring::r_max(4, 4) == Natural(8));
  CHECK(waring::r_max(4, 3) == Natural(4));
  CHECK(waring::r_max(3, 5, waring::Mode::oracle) == Natural(9));
  CHECK(waring::r_max(6, 5) == Natural(16));
  CHECK(waring::r_max(6, 5, waring::Mode::oracle) == Natural(16));
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned d = 2; d <= 20; ++d) {
      const Natural closed = waring::r_max(n, d, waring::Mode::closed_form);
      REQUIRE(closed == waring::r_max(n, d, waring::Mode::oracle));
      REQUIRE(closed == Natural(oracle::max_monomial_rank(n, d)));
    }
  }
}

TEST_CASE("AGM bound holds for every enumerated monomial") {
  for (unsigned n = 2; n <= 8; ++n) {
    for (unsigned d = 1; d <= 25; ++d) {
      const Natural rhs = waring::pow(Natural(d + n - 2ULL), n - 1);
      const Natural scale = waring::pow(Natural(n - 1ULL), n - 1);
      waring::for_each_monomial(n, d, [&](const Monomial& m) {
        REQUIRE(waring::waring_rank(m) * scale <= rhs);
      });
    }
  }
}

TEST_CASE("monomial stream") {
  waring::MonomialStream s(3, 4);
  std::vector<std::string> seen;
  while (auto m = s.next()) seen.push_back(m->to_string());
  CHECK(seen == std::vector<std::string>{"4", "1,3", "2,2", "1,1,2"});
  CHECK_FALSE(s.next().has_value());
}
