#include <algorithm>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "quadpre/orbit.hpp"

using quadpre::CurvePoint;
using quadpre::Integer;
using quadpre::PreimageMember;
using quadpre::Rational;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

Rational iterate(Rational w, const Rational& c, int n) {
  for (int i = 0; i < n; ++i) w = w * w + c;
  return w;
}

bool contains(const std::vector<CurvePoint>& pts, const Rational& x, const Rational& c) {
  return std::any_of(pts.begin(), pts.end(), [&](const CurvePoint& p) { return p.x == x && p.c == c; });
}

}  // namespace

TEST_CASE("pre-image examples") {
  CHECK(quadpre::rational_preimages(R("2"), R("-2")).members ==
        std::vector<PreimageMember>{{R("-2"), 1}, {R("2"), 1}, {R("0"), 2}});
  CHECK(quadpre::rational_preimages(R("16"), R("0")).members ==
        std::vector<PreimageMember>{{R("-4"), 1}, {R("4"), 1}, {R("-2"), 2}, {R("2"), 2}});
  CHECK(quadpre::rational_preimages(R("1"), R("0")).members ==
        std::vector<PreimageMember>{{R("-1"), 1}, {R("1"), 1}});
  // 2-cycle 1 -> -2 -> 1 under c = -3
  const auto cyc = quadpre::rational_preimages(R("1"), R("-3"));
  CHECK(cyc.members == std::vector<PreimageMember>{{R("-2"), 1}, {R("2"), 1}, {R("-1"), 2}, {R("1"), 2}});
  CHECK(cyc.trace.front().frontier == 1);
  CHECK(quadpre::rational_preimages(R("3"), R("0")).members.empty());
}

TEST_CASE("pre-images are sound and minimal") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  for (int i = 0; i < 40; ++i) {
    const Rational c(Integer(num(rng)), Integer(den(rng)));
    const Rational x(Integer(num(rng)), Integer(den(rng)));
    const Rational a = iterate(x, c, 1 + i % 2);
    const auto set = quadpre::rational_preimages(a, c);
    bool has_x = false;
    for (const auto& m : set.members) {
      CHECK(iterate(m.value, c, m.level) == a);
      for (int j = 1; j < m.level; ++j) CHECK(iterate(m.value, c, j) != a);
      has_x = has_x || m.value == x;
    }
    CHECK(has_x);
  }
}

TEST_CASE("pre-images match forward enumeration") {
  for (const auto& [a, c] : std::vector<std::pair<Rational, Rational>>{
           {R("2"), R("-2")}, {R("16"), R("0")}, {R("1"), R("0")}, {R("1"), R("-3")}, {R("-3/4"), R("-1")},
           {R("5/16"), R("-3/4")}, {R("0"), R("-2")}}) {
    CHECK(quadpre::rational_preimages(a, c).members == quadpre::brute_force_preimages(a, c, 20, 6).members);
  }
}

TEST_CASE("curve point search") {
  const auto p2 = quadpre::curve_point_search(2, R("2"), 5);
  CHECK(contains(p2, R("2"), R("-2")));
  CHECK(contains(quadpre::curve_point_search(3, R("0"), 2), R("0"), R("0")));
  const auto k = quadpre::curve_point_search(2, R("-1"), 5);
  CHECK(contains(k, R("1"), R("-1")));
  for (const auto& p : k) CHECK(iterate(p.x, p.c, 2) == R("-1"));

  // Same output for any worker count; canonical order.
  const auto one = quadpre::curve_point_search(3, R("0"), 40, 1);
  const auto many = quadpre::curve_point_search(3, R("0"), 40, 7);
  CHECK(one == many);
  for (std::size_t i = 1; i < one.size(); ++i) {
    const auto& u = one[i - 1];
    const auto& v = one[i];
    CHECK((quadpre::height_order_less(u.c, v.c) || (u.c == v.c && quadpre::height_order_less(u.x, v.x))));
  }
  // Forward check of completeness on a small grid.
  for (long q = 1; q <= 6; ++q) {
    for (long p = -6; p <= 6; ++p) {
      const Rational c{Integer(p), Integer(q)};
      if (c.denominator() != q) continue;
      for (long xq = 1; xq <= 4; ++xq) {
        for (long xp = -8; xp <= 8; ++xp) {
          const Rational x{Integer(xp), Integer(xq)};
          if (iterate(x, c, 2) == R("-1")) CHECK(contains(k, x, c) == (q <= 5 && std::abs(p) <= 5));
        }
      }
    }
  }
  CHECK_THROWS_AS(quadpre::curve_point_search(9, R("0"), 2), std::out_of_range);
}

TEST_CASE("degree profiles") {
  CHECK(quadpre::preimage_degree_profile(R("2"), R("-2"), 2) == std::vector<int>{1, 1, 1, 1});
  for (int k = 1; k <= 4; ++k) CHECK(quadpre::preimage_degree_profile(R("0"), R("0"), k) == std::vector<int>(1u << k, 1));
  CHECK(quadpre::preimage_degree_profile(R("0"), R("1"), 2) == std::vector<int>{4});
  for (int k = 1; k <= 5; ++k) {
    const auto prof = quadpre::preimage_degree_profile(R("3/2"), R("-1/3"), k);
    int total = 0;
    for (int d : prof) total += d;
    CHECK(total == (1 << k));
  }
}
