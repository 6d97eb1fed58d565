// Genus, gonality and degree thresholds for the pre-image curves C(N, a).

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quadpre/rational.hpp"

namespace quadpre {

/// (N - 3) 2^(N-2) + 1, which is 0 for N = 1, 2. Requires 1 <= N <= 62.
long long genus_closed_form(int level);

struct GenusReport {
  int level = 0;
  Rational a;
  /// ramification[M - 2] = r_M = deg squarefree(g_M(c) - a), M = 2..N.
  std::vector<int> ramification;
  /// trace[M - 1] = g(M) from the recursion, M = 1..N.
  std::vector<long long> trace;
  long long genus_recursion = 0;
  long long genus_formula = 0;
  bool agree = false;
};

/// Riemann-Hurwitz recursion 2g(M) - 2 = 2(2g(M-1) - 2) + r_M from g(1) = 0.
/// A singular a throws SingularCurveError naming the failing level; any
/// r_M != 2^(M-1) or disagreement with the closed form throws MathError.
/// Requires 1 <= N <= 8.
GenusReport genus_via_rh(int level, const Rational& a);

/// 2^(N-2), N >= 2.
long long gonality(int level);
/// 2^(N-3), N >= 3.
long long genus1_min_degree(int level);

struct DegreeThresholds {
  int level = 0;
  /// rho[M - 2] = rho(delta_M) = 2^(M-3) for M = 2..N.
  std::vector<Rational> rho;
  Rational big_b;    // B_N = 2^(N-3)
  Rational small_b;  // b_N = 1/2
};

/// Requires 2 <= N <= 62.
DegreeThresholds degree_thresholds(int level);

struct UniformLevel {
  long long bound_b = 0;
  int level = 0;                 // floor(4 + log2 B)
  long long singular_bound = 0;  // 2^N - N - 1
  bool below = false;            // singular_bound < 16 B
};

/// Requires 1 <= B <= 2^40.
UniformLevel uniform_level(long long bound_b);

struct QuarterGenera {
  int level = 0;
  /// Per level M = 3..N: (r+, r-) = deg squarefree(q+-_M).
  std::vector<std::pair<int, int>> ramification;
  std::pair<long long, long long> genera;
  std::string assumption;
};

/// Genera of the two components of P(N, -1/4) by the per-component
/// recursion, base genus 0 at N = 2. Requires 2 <= N <= 6.
QuarterGenera quarter_component_genera(int level);

}  // namespace quadpre
