#include <cmath>
#include <random>

#include "doctest.h"
#include "quadpre/rational.hpp"

using quadpre::Integer;
using quadpre::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

}  // namespace

TEST_CASE("rationals are normalized on construction") {
  const Rational r(Integer(4), Integer(-6));
  CHECK(r.numerator() == -2);
  CHECK(r.denominator() == 3);
  CHECK(Rational(Integer(0), Integer(-5)).denominator() == 1);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("parse and print") {
  CHECK(Rational::parse("-1/4") == Rational(Integer(-1), Integer(4)));
  CHECK(Rational::parse("6/8").to_string() == "3/4");
  CHECK(Rational::parse("7").to_string() == "7");
  CHECK(Rational::parse("-10/5").to_string() == "-2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("weil height") {
  CHECK(quadpre::weil_height(Rational(0)) == 0.0);
  CHECK(quadpre::weil_height(Rational(2)) == doctest::Approx(std::log(2.0)));
  CHECK(quadpre::weil_height(Rational(Integer(4), Integer(6))) == doctest::Approx(std::log(3.0)));
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  CHECK(quadpre::weil_height(Rational(big)) == doctest::Approx(400 * std::log(10.0)));
}

TEST_CASE("height inequalities on random samples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational r = random_rational(rng, 1000), s = random_rational(rng, 1000);
    const double hr = quadpre::weil_height(r), hs = quadpre::weil_height(s);
    CHECK(quadpre::weil_height(r * s) <= hr + hs + 1e-12);
    CHECK(quadpre::weil_height(r + s) <= hr + hs + std::log(2.0) + 1e-12);
  }
}

TEST_CASE("p-adic valuation") {
  const auto v1 = quadpre::padic_valuation(Rational(Integer(-1), Integer(4)), 2);
  CHECK(v1.valuation == -2);
  CHECK_FALSE(v1.infinite);
  CHECK(quadpre::padic_valuation(Rational(Integer(9), Integer(2)), 3).valuation == 2);
  CHECK(quadpre::padic_valuation(Rational(7), 5).valuation == 0);
  CHECK(quadpre::padic_valuation(Rational(0), 3).infinite);
  CHECK_THROWS_AS(quadpre::padic_valuation(Rational(3), 4), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Rational r = random_rational(rng, 5000), s = random_rational(rng, 5000);
    if (r.is_zero() || s.is_zero()) continue;
    for (int p : {2, 3, 5, 7}) {
      CHECK(quadpre::padic_valuation(r * s, p).valuation ==
            quadpre::padic_valuation(r, p).valuation + quadpre::padic_valuation(s, p).valuation);
    }
  }
}

TEST_CASE("rational square roots") {
  CHECK(*quadpre::rational_sqrt(Rational(4)) == Rational(2));
  CHECK_FALSE(quadpre::rational_sqrt(Rational(2)).has_value());
  CHECK(*quadpre::rational_sqrt(Rational(Integer(9), Integer(16))) == Rational(Integer(3), Integer(4)));
  CHECK(*quadpre::rational_sqrt(Rational(0)) == Rational(0));
  CHECK_FALSE(quadpre::rational_sqrt(Rational(-4)).has_value());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Rational r = abs(random_rational(rng, 60));
    auto root = quadpre::rational_sqrt(r);
    if (root) {
      CHECK(*root * *root == r);
      CHECK(root->sign() >= 0);
    } else {
      CHECK((!quadpre::integer_sqrt(r.numerator()) || !quadpre::integer_sqrt(r.denominator())));
    }
    CHECK(*quadpre::rational_sqrt(r * r) == r);
  }
}
