// Canonical heights for f_c(x) = x^2 + c over Q.
//
// h_c(z) = lim 2^-n h(f_c^n(z)) is computed as a sum of local heights: one
// archimedean part from a certified floating-point orbit, and one part per
// prime dividing den(z) or den(c), each an exact rational multiple of log p.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadpre/rational.hpp"

namespace quadpre {

struct HeightOptions {
  int archimedean_cap = 200;  // iterations before giving up on escape
  int padic_cap = 64;         // valuation iterations per prime
};

struct FiniteLocalHeight {
  Integer prime;
  /// lambda_p = coefficient * log p (exact when escaped).
  Rational coefficient;
  double error = 0;  // nonzero only when the orbit did not escape within the cap
  bool escaped = true;
  int iterations = 0;
};

struct HeightReport {
  Rational z;
  Rational c;
  double value = 0;
  double error_bound = 0;
  double archimedean = 0;
  double archimedean_error = 0;
  /// Iteration at which |w| exceeded the escape radius, or -1.
  int escape_iteration = -1;
  std::vector<FiniteLocalHeight> finite;
  /// Set when error_bound >= tol.
  bool flagged = false;
};

/// Requires tol > 0.
HeightReport canonical_height(const Rational& z, const Rational& c, double tol = 1e-9, const HeightOptions& opts = {});

/// h(c) + log 2, which bounds |h_c(z) - h(z)| for every rational z.
double height_gap_constant(const Rational& c);

struct PreperiodicReport {
  bool preperiodic = false;
  /// z, f(z), ... up to and including the repeated or escaping value.
  std::vector<Rational> orbit;
  /// orbit[repeat_index] == orbit[repeat_of] when preperiodic.
  int repeat_index = -1;
  int repeat_of = -1;
  /// First index whose height exceeds the gap constant.
  int escape_index = -1;
};

/// Exact decision: a preperiodic orbit never leaves
/// {w : h(w) <= h(c) + log 2}, a finite set, so either the orbit leaves it or
/// repeats.
PreperiodicReport preperiodic_orbit(const Rational& z, const Rational& c);
bool is_preperiodic(const Rational& z, const Rational& c);

struct EpsilonRow {
  Rational x0;
  Rational c;
  double height_x0 = 0;
  double height_c = 0;
  double residual = 0;  // |h(x0) - h(c)/16|
  bool relation_holds = false;
  bool inequality_applies = false;  // |c| > 4
  double inequality_bound = 0;      // h(c)/16 + (log 5 - 2 log 2)/16
  bool inequality_holds = true;
};

struct EpsilonDemo {
  std::vector<EpsilonRow> rows;
  bool passed = true;
};

/// Points (x0, c) with f_c^3(x0) = 0; anything else throws
/// std::invalid_argument. Since f_c^4(x0) = c, h_c(x0) = h_c(c) / 16.
EpsilonDemo epsilon_demo(const std::vector<std::pair<Rational, Rational>>& points, double tol = 1e-9);

}  // namespace quadpre
