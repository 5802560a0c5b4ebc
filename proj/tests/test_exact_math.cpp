#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "waring/exact_math.hpp"

using waring::binomial;
using waring::binomial_or_zero;
using waring::ceil_div;
using waring::Natural;
using waring::Ratio;

TEST_CASE("binomial small values") {
  CHECK(binomial(4, 2) == Natural(6));
  CHECK(binomial(6, 3) == Natural(20));
  for (std::uint64_t m = 0; m < 10; ++m) CHECK(binomial(m, 0) == Natural(1));
  CHECK(binomial(2, 5) == Natural(0));
}

TEST_CASE("binomial satisfies the Pascal recurrence up to 60") {
  for (std::uint64_t m = 1; m <= 60; ++m) {
    for (std::uint64_t k = 1; k <= m; ++k) {
      REQUIRE(binomial(m, k) == binomial(m - 1, k - 1) + binomial(m - 1, k));
    }
  }
}

TEST_CASE("binomial does not overflow") {
  // C(200,100) has 59 decimal digits.
  CHECK(binomial(200, 100).to_string() == "90548514656103281165404177077484163874504589675413336841320");
  CHECK(binomial(200, 100) == binomial(200, 100));
}

TEST_CASE("binomial_or_zero vanishes outside the triangle") {
  CHECK(binomial_or_zero(-1, 0) == Natural(0));
  CHECK(binomial_or_zero(3, -1) == Natural(0));
  CHECK(binomial_or_zero(2, 3) == Natural(0));
  CHECK(binomial_or_zero(5, 2) == Natural(10));
}

TEST_CASE("ceil_div") {
  CHECK(ceil_div(20, 4) == Natural(5));
  CHECK(ceil_div(21, 3) == Natural(7));
  CHECK(ceil_div(10, 3) == Natural(4));
  CHECK_THROWS_AS(ceil_div(1, 0), waring::DivisionByZero);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> as(0, 999'999);
  std::uniform_int_distribution<std::uint64_t> bs(1, 1000);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t a = as(rng);
    const std::uint64_t b = bs(rng);
    REQUIRE(ceil_div(a, b) == Natural((a + b - 1) / b));
  }
}

TEST_CASE("Natural arithmetic") {
  CHECK(waring::pow(Natural(2), 100).to_string() == "1267650600228229401496703205376");
  CHECK(waring::factorial(20) == Natural(2432902008176640000ULL));
  CHECK(Natural(7) - Natural(3) == Natural(4));
  CHECK_THROWS_AS(Natural(3) - Natural(7), std::domain_error);
  CHECK(Natural::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
  CHECK_THROWS(Natural::parse("12a"));
  CHECK(Natural(17).div_floor(5) == Natural(3));
  CHECK(Natural(17).mod(5) == Natural(2));
  CHECK_THROWS_AS(Natural(1).div_floor(0), waring::DivisionByZero);
  CHECK(Natural(42).to_u64() == 42);
  CHECK_THROWS_AS(waring::pow(Natural(2), 64).to_u64(), std::overflow_error);
}

TEST_CASE("Ratio normal form") {
  const Ratio r(waring::BigInt(6), waring::BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Ratio(waring::BigInt(0), waring::BigInt(-5)).denominator() == 1);
  CHECK_THROWS_AS(Ratio(waring::BigInt(1), waring::BigInt(0)), waring::DivisionByZero);
  CHECK(Ratio(Natural(24), Natural(27)).to_string() == "8/9");
  CHECK(Ratio::parse("10/4") == Ratio(Natural(5), Natural(2)));
  CHECK(Ratio::parse("-3") == Ratio(-3));
  CHECK_THROWS(Ratio::parse("1/"));
  CHECK_THROWS(Ratio::parse("x/2"));
}

TEST_CASE("ratio_compare") {
  const Ratio three_halves(Natural(3), Natural(2));
  CHECK(waring::ratio_compare(three_halves, three_halves) == std::strong_ordering::equal);
  CHECK(waring::ratio_compare(Ratio(Natural(8), Natural(9)), Ratio(1)) == std::strong_ordering::less);
  // (d+n-2)/(d+n-1) at d=3, n=4 against (n-1)/n: 5*4 = 20 > 6*3 = 18.
  CHECK(waring::ratio_compare(Ratio(Natural(5), Natural(6)), Ratio(Natural(3), Natural(4))) ==
        std::strong_ordering::greater);
  CHECK(Ratio(-1) < Ratio(Natural(1), Natural(1000000)));
}

TEST_CASE("Ratio arithmetic laws on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> nums(-1000, 1000);
  std::uniform_int_distribution<long long> dens(1, 1000);
  auto draw = [&] { return Ratio(waring::BigInt(nums(rng)), waring::BigInt(dens(rng))); };
  for (int i = 0; i < 2000; ++i) {
    const Ratio a = draw(), b = draw(), c = draw();
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - b) + b == a);
    // Normalization is idempotent.
    REQUIRE(Ratio(a.numerator(), a.denominator()) == a);
    // Exact order agrees with cross-multiplication.
    const bool less = a.numerator() * b.denominator() < b.numerator() * a.denominator();
    REQUIRE((a < b) == less);
    if (!b.is_zero()) REQUIRE((a / b) * b == a);
  }
}

TEST_CASE("to_double and approx_string") {
  CHECK(Ratio(Natural(1), Natural(3)).to_double() == doctest::Approx(1.0 / 3));
  CHECK(waring::approx_string(2.0 / 3) == "0.666666666667");
  CHECK(waring::approx_string(6) == "6");
  const Ratio huge(waring::pow(Natural(10), 400), waring::pow(Natural(10), 399) * Natural(4));
  CHECK(huge.to_double() == doctest::Approx(2.5));
  CHECK((-huge).to_double() == doctest::Approx(-2.5));
}
