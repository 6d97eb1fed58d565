#include "doctest.h"
#include "test_support.hpp"
#include "quadpre/dynamics.hpp"
#include "quadpre/errors.hpp"

using quadpre::BiPoly;
using quadpre::Identity;
using quadpre::Integer;
using quadpre::Rational;
using quadpre::UniPoly;

namespace {

UniPoly P(const char* text, char var = 'x') { return UniPoly::parse(text, var); }

// f_c^n(x) evaluated by plain iteration.
Rational iterate(const Rational& x, const Rational& c, int n) {
  Rational w = x;
  for (int i = 0; i < n; ++i) w = w * w + c;
  return w;
}

}  // namespace

TEST_CASE("critical orbit polynomials") {
  CHECK(quadpre::critical_orbit_poly(1).poly == P("c", 'c'));
  CHECK(quadpre::critical_orbit_poly(2).poly == P("c^2 + c", 'c'));
  CHECK(quadpre::critical_orbit_poly(3).poly.to_string() == "c^4 + 2*c^3 + c^2 + c");
  for (int j = 1; j <= 8; ++j) {
    const UniPoly g = quadpre::critical_orbit_poly(j).poly;
    CHECK(g.degree() == (1 << (j - 1)));
    CHECK(g.variable() == 'c');
    for (int c = -3; c <= 3; ++c) CHECK(g.evaluate(Rational(c)) == iterate(Rational(0), Rational(c), j));
  }
  CHECK_THROWS_AS(quadpre::critical_orbit_poly(0), std::out_of_range);
}

TEST_CASE("bivariate iterates agree with pointwise iteration") {
  CHECK(quadpre::iterate_bipoly(0) == BiPoly::x());
  for (int n = 1; n <= 5; ++n) {
    const BiPoly f = quadpre::iterate_bipoly(n);
    CHECK(f.xdeg() == (1 << n));
    CHECK(f.cdeg() == (1 << (n - 1)));
    CHECK(f.at_x_zero() == quadpre::critical_orbit_poly(n).poly);
    for (const Rational c : {Rational(-2), Rational(Integer(1), Integer(3)), Rational(Integer(-7), Integer(4))}) {
      const UniPoly fx = f.at_c(c);
      CHECK(fx == quadpre::specialized_iterate(n, c, Rational(0)));
      for (const Rational x : {Rational(0), Rational(1), Rational(Integer(-2), Integer(5))}) {
        CHECK(fx.evaluate(x) == iterate(x, c, n));
      }
    }
  }
  CHECK(quadpre::iterate_bipoly(3).substitute_x(quadpre::iterate_bipoly(2)) == quadpre::iterate_bipoly(5));
  CHECK(quadpre::iterate_bipoly(8).xdeg() == 256);
  CHECK_THROWS_AS(quadpre::iterate_bipoly(9), std::out_of_range);
  CHECK_THROWS_AS(quadpre::iterate_bipoly(-1), std::out_of_range);
}

TEST_CASE("specialized iterate") {
  CHECK(quadpre::specialized_iterate(0, Rational(5), Rational(2)) == P("x - 2"));
  CHECK(quadpre::specialized_iterate(2, Rational(-1), Rational(0)) == P("x^4 - 2*x^2"));
}

TEST_CASE("family identities hold exactly") {
  for (Identity which : {Identity::FixedPoint, Identity::TwoCycle, Identity::KFamily}) {
    const auto rec = quadpre::verify_identity(which);
    CHECK(rec.holds);
    for (const auto& r : rec.residuals) CHECK(r.is_zero());
    for (int d : rec.witness_degrees) CHECK(d >= 2);
  }
  CHECK(quadpre::identity_name(Identity::KFamily) == "k-family");
  // spot values: c = -k^2 - k + 1 sends k to -3k + 2 in two steps
  for (int k = -5; k <= 5; ++k) {
    const Rational c(-k * k - k + 1);
    CHECK(iterate(Rational(k), c, 2) == Rational(-3 * k + 2));
  }
}

TEST_CASE("quarter splitting") {
  for (int n = 2; n <= 6; ++n) {
    const auto q = quadpre::quarter_splitting(n);
    CHECK(q.plus * q.minus == quadpre::iterate_bipoly(n) + BiPoly::constant(Rational(Integer(1), Integer(4))));
    CHECK(q.plus.xdeg() == (1 << (n - 1)));
    CHECK(q.minus.xdeg() == (1 << (n - 1)));
    // c = -1/4 is where both factors meet at x = -1/2 ... check product at a grid point
    const Rational c(Integer(-1), Integer(4));
    const Rational x(Integer(1), Integer(2));
    CHECK(q.plus.at_c(c).evaluate(x) * q.minus.at_c(c).evaluate(x) == iterate(x, c, n) + Rational(Integer(1), Integer(4)));
  }
  CHECK_THROWS_AS(quadpre::quarter_splitting(1), std::out_of_range);
}
