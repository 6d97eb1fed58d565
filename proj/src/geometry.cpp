#include "quadpre/geometry.hpp"

#include <bit>
#include <stdexcept>

#include "quadpre/dynamics.hpp"
#include "quadpre/errors.hpp"
#include "quadpre/strata.hpp"

namespace quadpre {

namespace {

void check_range(int level, int lo, int hi, const char* what) {
  if (level < lo || level > hi) {
    throw std::out_of_range(std::string(what) + " level " + std::to_string(level) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

long long pow2(int e) { return 1LL << e; }

// g(M) from g(M-1) and r_M; r_M must be even.
long long genus_step(long long prev, int r, int level) {
  if (r % 2 != 0) throw MathError("odd ramification count at level " + std::to_string(level));
  return 2 * prev - 1 + r / 2;
}

}  // namespace

long long genus_closed_form(int level) {
  check_range(level, 1, 62, "genus");
  if (level <= 2) return 0;
  return (level - 3) * pow2(level - 2) + 1;
}

GenusReport genus_via_rh(int level, const Rational& a) {
  check_range(level, 1, kMaxStrataLevel, "genus");
  const auto verdict = is_nonsingular(level, a);
  if (!verdict.nonsingular) throw SingularCurveError("P(N, " + a.to_string() + ") is singular at level " + std::to_string(verdict.failing_level), verdict.failing_level);

  GenusReport out;
  out.level = level;
  out.a = a;
  out.trace.push_back(0);
  const UniPoly shift = UniPoly::constant(a, 'c');
  for (int m = 2; m <= level; ++m) {
    const int r = squarefree_part(critical_orbit_poly(m).poly - shift).degree();
    if (r != pow2(m - 1)) {
      throw MathError("ramification count " + std::to_string(r) + " at level " + std::to_string(m) +
                      " differs from " + std::to_string(pow2(m - 1)));
    }
    out.ramification.push_back(r);
    out.trace.push_back(genus_step(out.trace.back(), r, m));
  }
  out.genus_recursion = out.trace.back();
  out.genus_formula = genus_closed_form(level);
  out.agree = out.genus_recursion == out.genus_formula;
  if (!out.agree) {
    throw MathError("recursion genus " + std::to_string(out.genus_recursion) + " != closed form " +
                    std::to_string(out.genus_formula));
  }
  return out;
}

long long gonality(int level) {
  check_range(level, 2, 62, "gonality");
  return pow2(level - 2);
}

long long genus1_min_degree(int level) {
  check_range(level, 3, 62, "genus-one degree");
  return pow2(level - 3);
}

DegreeThresholds degree_thresholds(int level) {
  check_range(level, 2, 62, "threshold");
  const auto two_pow = [](int e) {
    return e >= 0 ? Rational(Integer(Integer(1) << e), Integer(1)) : Rational(Integer(1), Integer(Integer(1) << -e));
  };
  DegreeThresholds out;
  out.level = level;
  for (int m = 2; m <= level; ++m) out.rho.push_back(two_pow(m - 3));
  out.big_b = two_pow(level - 3);
  out.small_b = Rational(Integer(1), Integer(2));
  return out;
}

UniformLevel uniform_level(long long bound_b) {
  if (bound_b < 1 || bound_b > pow2(40)) throw std::out_of_range("B must lie in [1, 2^40]");
  UniformLevel out;
  out.bound_b = bound_b;
  // floor(log2 B) is the index of the top bit.
  out.level = 4 + (std::bit_width(static_cast<unsigned long long>(bound_b)) - 1);
  out.singular_bound = pow2(out.level) - out.level - 1;
  out.below = out.singular_bound < 16 * bound_b;
  return out;
}

QuarterGenera quarter_component_genera(int level) {
  check_range(level, 2, 6, "quarter");
  QuarterGenera out;
  out.level = level;
  out.assumption = "cusps of each component of P(N,-1/4) assumed unramified under delta";
  quarter_splitting(level);  // throws unless the product identity holds

  const UniPoly c = UniPoly::indeterminate('c');
  const UniPoly half = UniPoly::constant(Rational(Integer(1), Integer(2)), 'c');
  long long gp = 0;
  long long gm = 0;
  for (int m = 3; m <= level; ++m) {
    const UniPoly h = critical_orbit_poly(m - 2).poly;
    const UniPoly qp = h * h + h + c + half;
    const UniPoly qm = h * h - h + c + half;
    const int rp = squarefree_part(qp).degree();
    const int rm = squarefree_part(qm).degree();
    if (rp != qp.degree() || rm != qm.degree()) {
      throw MathError("component ramification polynomial not squarefree at level " + std::to_string(m));
    }
    if (rp + rm != pow2(m - 1)) throw MathError("component ramification counts do not partition at level " + std::to_string(m));
    out.ramification.emplace_back(rp, rm);
    gp = genus_step(gp, rp, m);
    gm = genus_step(gm, rm, m);
  }
  out.genera = {gp, gm};
  return out;
}

}  // namespace quadpre
