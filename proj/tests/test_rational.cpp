#include <doctest.h>

#include <random>
#include <unordered_set>

#include "paramat/rational.hpp"

using paramat::Rational;

TEST_CASE("rationals are kept reduced with a positive denominator") {
  const Rational a(2, 4);
  CHECK(a.to_string() == "1/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(0, 5).to_string() == "0");
}

TEST_CASE("arithmetic and ordering are exact") {
  const Rational third(1, 3);
  const Rational half(1, 2);
  CHECK(third + half == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(third * half == Rational(1, 6));
  CHECK(third / half == Rational(2, 3));
  CHECK(third < half);
  CHECK(Rational(1) - half == half);
  CHECK(-half < Rational(0));
}

TEST_CASE("parse accepts only canonical spellings") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("1") == Rational(1));
  CHECK(Rational::parse("-3/7") == Rational(-3, 7));
  for (const char* bad : {"", "0.5", "2/4", "1/1", "1/0", "01", "-0", "1/", "/2", "a", "1/2/3", " 1", "+1"})
    CHECK_MESSAGE(!Rational::parse(bad), bad);
}

TEST_CASE("to_string and parse are inverse on random fractions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    const Rational r(num(rng), den(rng));
    const auto back = Rational::parse(r.to_string());
    REQUIRE(back);
    CHECK(*back == r);
  }
}

TEST_CASE("equal rationals hash equally") {
  std::unordered_set<Rational> set{Rational(1, 2), Rational(2, 4), Rational(3, 6)};
  CHECK(set.size() == 1);
}
