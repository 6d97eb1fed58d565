// Rational backward orbits of f_c(x) = x^2 + c.

#pragma once

#include <vector>

#include "quadpre/rational.hpp"

namespace quadpre {

struct PreimageMember {
  Rational value;
  int level = 0;  // smallest M >= 1 with f_c^M(value) = a
  friend bool operator==(const PreimageMember&, const PreimageMember&) = default;
};

struct PreimageStep {
  int level = 0;
  int frontier = 0;    // values expanded at this level
  int discovered = 0;  // new values found one level down
};

struct PreimageSet {
  Rational a;
  Rational c;
  /// Sorted by level, then by (denominator, numerator).
  std::vector<PreimageMember> members;
  std::vector<PreimageStep> trace;
};

/// Breadth-first search over distinct values: children of t are the rational
/// solutions of x^2 = t - c. Terminates because every pre-image satisfies
/// h(x) <= h(a) + 2(h(c) + log 2); the bound is checked as the search runs.
PreimageSet rational_preimages(const Rational& a, const Rational& c);

/// Forward enumeration oracle: every p/q with |p| <= H, 1 <= q <= H such that
/// f_c^M(p/q) = a for some 1 <= M <= max_level, in the same order.
PreimageSet brute_force_preimages(const Rational& a, const Rational& c, long height, int max_level);

struct CurvePoint {
  Rational x;
  Rational c;
  int level = 0;
  Rational a;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Rational points (x, c) with f_c^N(x) = a and |num c|, den c <= H, found by
/// solving N layers of square roots backward from a. Ordered by c, then x,
/// each by (denominator, numerator). The c-grid is split across `threads`
/// workers (0 = hardware concurrency); output does not depend on it.
/// Requires 1 <= N <= 8 and H >= 1.
std::vector<CurvePoint> curve_point_search(int level, const Rational& a, long height, unsigned threads = 0);

/// Degrees, ascending and with multiplicity, of the irreducible factors over Q
/// of f_c^k(x) - t. Requires 1 <= k <= 8.
std::vector<int> preimage_degree_profile(const Rational& t, const Rational& c, int k);

}  // namespace quadpre
