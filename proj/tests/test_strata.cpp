#include <chrono>

#include "doctest.h"
#include "test_support.hpp"
#include "quadpre/dynamics.hpp"
#include "quadpre/factor.hpp"
#include "quadpre/strata.hpp"

using quadpre::Integer;
using quadpre::Rational;
using quadpre::UniPoly;

namespace {

UniPoly P(const char* text) { return UniPoly::parse(text, 'a'); }

// Independent eliminant: the resultant of g - a and g' computed in Q[a][c]
// by a fraction-free Sylvester determinant whose entries are polynomials in a.
UniPoly sylvester_eliminant(int level) {
  const UniPoly g = quadpre::critical_orbit_poly(level).poly;
  const UniPoly dg = g.derivative();
  const int m = g.degree();
  const int n = dg.degree();
  const int size = m + n;
  std::vector<std::vector<UniPoly>> M(static_cast<std::size_t>(size), std::vector<UniPoly>(static_cast<std::size_t>(size), UniPoly('a')));
  auto coeff_a = [&](int i) {
    UniPoly v = UniPoly::constant(g.coefficient(i), 'a');
    if (i == 0) v = v - P("a");
    return v;
  };
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] = coeff_a(i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) {
      M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - i)] = UniPoly::constant(dg.coefficient(i), 'a');
    }
  }
  // Bareiss elimination over Q[a].
  UniPoly prev = UniPoly::constant(Rational(1), 'a');
  int sign = 1;
  for (int k = 0; k + 1 < size; ++k) {
    auto& Mk = M[static_cast<std::size_t>(k)];
    if (Mk[static_cast<std::size_t>(k)].is_zero()) {
      int piv = k + 1;
      while (piv < size && M[static_cast<std::size_t>(piv)][static_cast<std::size_t>(k)].is_zero()) ++piv;
      if (piv == size) return UniPoly('a');
      std::swap(M[static_cast<std::size_t>(k)], M[static_cast<std::size_t>(piv)]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        auto& e = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        e = quadpre::divmod(M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] * e -
                                M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * M[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)],
                            prev)
                .first;
      }
    }
    prev = M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  UniPoly det = M[static_cast<std::size_t>(size - 1)][static_cast<std::size_t>(size - 1)];
  return sign < 0 ? -det : det;
}

UniPoly normalized(const UniPoly& p) { return UniPoly::from_integers(p.primitive(), 'a'); }

}  // namespace

TEST_CASE("critical-value polynomials, small levels") {
  CHECK(quadpre::critical_value_poly(2) == P("4*a + 1"));
  CHECK(quadpre::critical_value_poly(3) == P("256*a^3 + 368*a^2 + 104*a + 23"));
  CHECK(quadpre::critical_value_poly(4) ==
        P("16777216*a^7 + 37683200*a^6 + 27009024*a^5 + 25288448*a^4 + 5791488*a^3 + 1395104*a^2 + 288464*a - 58673"));
  const UniPoly v5 = quadpre::critical_value_poly(5);
  CHECK(v5.degree() == 15);
  CHECK(v5.primitive().back() == Integer(1) << 64);
  CHECK_THROWS_AS(quadpre::critical_value_poly(1), std::out_of_range);
  CHECK_THROWS_AS(quadpre::critical_value_poly(9), std::out_of_range);
}

TEST_CASE("critical-value polynomials match a Sylvester determinant oracle") {
  for (int j = 2; j <= 4; ++j) CHECK(quadpre::critical_value_poly(j) == normalized(sylvester_eliminant(j)));
}

TEST_CASE("critical values are images of critical points") {
  // V_j(g_j(c)) vanishes at every critical point of g_j.
  for (int j = 2; j <= 4; ++j) {
    const UniPoly g = quadpre::critical_orbit_poly(j).poly;
    const UniPoly composite = quadpre::critical_value_poly(j).renamed('c').compose(g);
    CHECK(quadpre::divmod(composite, g.derivative()).second.is_zero());
  }
}

TEST_CASE("exceptional sets") {
  const int expected[] = {0, 0, 1, 3, 7, 15, 31};
  for (int n = 2; n <= 6; ++n) {
    const auto s = quadpre::exceptional_set(n);
    CHECK(s.squarefree);
    CHECK(s.disjoint);
    CHECK(s.count == expected[n]);
    CHECK(s.irreducible);
  }
  const auto s2 = quadpre::exceptional_set(2);
  REQUIRE(s2.rational_roots.size() == 1);
  CHECK(s2.rational_roots[0] == Rational(Integer(-1), Integer(4)));
  CHECK(quadpre::exceptional_set(3).rational_roots.empty());
}

TEST_CASE("nonsingularity") {
  CHECK(quadpre::is_nonsingular(1, Rational(Integer(-1), Integer(4))).nonsingular);
  const auto v = quadpre::is_nonsingular(5, Rational(Integer(-1), Integer(4)));
  CHECK_FALSE(v.nonsingular);
  CHECK(v.failing_level == 2);
  for (int a = -5; a <= 5; ++a) CHECK(quadpre::is_nonsingular(6, Rational(a)).nonsingular);
  CHECK(quadpre::is_nonsingular(8, Rational(Integer(3), Integer(7))).nonsingular);
  CHECK_THROWS_AS(quadpre::is_nonsingular(0, Rational(0)), std::out_of_range);
}

TEST_CASE("cumulative singular counts") {
  for (int n = 2; n <= 6; ++n) {
    const auto s = quadpre::cumulative_singular_count(n);
    CHECK(s.count == (1 << n) - n - 1);
    CHECK(s.equal);
    CHECK(s.asserted);
  }
}

TEST_CASE("2-adic audit") {
  const auto audit = quadpre::two_adic_audit(6);
  CHECK(audit.passed);
  REQUIRE(audit.levels.size() == 5);
  const auto& v3 = audit.levels[1].polygon.valuations;
  REQUIRE(v3.size() == 2);
  CHECK(v3[0] == std::pair<Rational, int>{Rational(-4), 1});
  CHECK(v3[1] == std::pair<Rational, int>{Rational(-2), 2});
}
