// Singularity stratification of the pre-image varieties P(N, a).
//
// P(N, a) is singular exactly when a is a critical value of some critical
// orbit polynomial g_j(c) = f_c^j(0) with 2 <= j <= N. The critical-value
// polynomial V_j(a) is the eliminant Res_c(g_j(c) - a, g_j'(c)), normalized to
// a primitive integer polynomial with positive leading coefficient; it has
// degree 2^(j-1) - 1.

#pragma once

#include <vector>

#include "quadpre/rational.hpp"
#include "quadpre/upoly.hpp"

namespace quadpre {

/// Highest level accepted by the stratification routines (deg V_8 = 127).
inline constexpr int kMaxStrataLevel = 8;

/// V_j(a), cached per level. Requires 2 <= j <= kMaxStrataLevel.
UniPoly critical_value_poly(int level);

struct CriticalStratum {
  int level = 0;
  UniPoly critical_values{'a'};  // V_N
  UniPoly exceptional{'a'};      // W_N: squarefree V_N with roots of V_2..V_{N-1} removed
  bool squarefree = false;       // V_N has no repeated roots
  bool disjoint = false;         // V_N shares no root with V_2..V_{N-1}
  int count = 0;                 // #A_N = deg W_N
  std::vector<Rational> rational_roots;
  bool irreducible = false;      // W_N irreducible over Q
};

CriticalStratum exceptional_set(int level);

struct NonsingularVerdict {
  bool nonsingular = true;
  /// First level j with V_j(a) = 0, or 0 when nonsingular.
  int failing_level = 0;
};

/// P(N, a) is nonsingular iff V_j(a) != 0 for 2 <= j <= N. N = 1 is always
/// nonsingular. Requires 1 <= N <= kMaxStrataLevel.
NonsingularVerdict is_nonsingular(int level, const Rational& a);

struct SingularCount {
  int level = 0;
  int count = 0;     // distinct roots of prod_{j<=N} V_j
  int expected = 0;  // 2^N - N - 1
  bool equal = false;
  /// Equality is a checked claim for N <= 6 and only reported beyond.
  bool asserted = false;
};

SingularCount cumulative_singular_count(int level);

struct AuditLevel {
  int level = 0;
  NewtonPolygon polygon;
  bool all_negative = false;
};

/// Newton polygon of V_j at p = 2 for every 2 <= j <= N; each root must have
/// negative 2-adic valuation.
struct TwoAdicAudit {
  std::vector<AuditLevel> levels;
  bool passed = false;
};

TwoAdicAudit two_adic_audit(int level);

}  // namespace quadpre
