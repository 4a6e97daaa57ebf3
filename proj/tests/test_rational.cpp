#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "minv/errors.hpp"
#include "minv/rational.hpp"

using minv::Rational;

TEST_CASE("rationals are canonical") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(6, -4).str() == "-3/2");  // denominator sign normalized
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(5, 1).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), minv::DomainError);
}

TEST_CASE("rational text syntax") {
  CHECK(Rational::parse("-16/3").str() == "-16/3");
  CHECK(Rational::parse("+4/2").str() == "2");
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("007") == Rational(7));

  for (const char* bad : {"", "-", "1/0", "1/-2", "1.5", "1 /2", "a", "1/", "/2", "2/3/4", "1e3"})
    CHECK_THROWS_AS(Rational::parse(bad), minv::InputError);
}

TEST_CASE("arithmetic and ordering") {
  const Rational a(2, 3), b(-1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK((a * b).str() == "-1/9");
  CHECK((a / b).str() == "-4");
  CHECK(a - a == Rational(0));
  CHECK(b < a);
  CHECK(Rational(-1, 2).abs() == Rational(1, 2));
  CHECK(Rational(3, 7).reciprocal() == Rational(7, 3));
  CHECK_THROWS_AS(Rational(0).reciprocal(), minv::DomainError);
  CHECK_THROWS_AS(a / Rational(0), minv::DomainError);
}

TEST_CASE("exactness over random 64-bit components") {
  std::mt19937_64 rng(testutil::seed_or(20240811));
  std::uniform_int_distribution<long> num(-1'000'000'000L, 1'000'000'000L);
  std::uniform_int_distribution<long> den(1, 1'000'000'000L);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}
