#include "quadpre/strata.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "quadpre/dynamics.hpp"
#include "quadpre/factor.hpp"

namespace quadpre {

namespace {

void check_level(int level, int lo) {
  if (level < lo || level > kMaxStrataLevel) {
    throw std::out_of_range("level " + std::to_string(level) + " outside [" + std::to_string(lo) + ", " +
                            std::to_string(kMaxStrataLevel) + "]");
  }
}

// Res_c(g(c) - a, g'(c)) at integer nodes a = 0..d, evaluated concurrently.
std::vector<Rational> eliminant_values(const UniPoly& g, const UniPoly& dg, int count) {
  std::vector<Rational> values(static_cast<std::size_t>(count));
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (int k = static_cast<int>(w); k < count; k += static_cast<int>(workers)) {
        values[static_cast<std::size_t>(k)] = resultant(g - UniPoly::constant(Rational(k), 'c'), dg);
      }
    }));
  }
  for (auto& j : jobs) j.get();
  return values;
}

// Newton divided differences on nodes 0..n-1.
UniPoly interpolate(const std::vector<Rational>& values, char var) {
  const int n = static_cast<int>(values.size());
  std::vector<Rational> coef = values;
  for (int k = 1; k < n; ++k) {
    for (int i = n - 1; i >= k; --i) {
      coef[static_cast<std::size_t>(i)] =
          (coef[static_cast<std::size_t>(i)] - coef[static_cast<std::size_t>(i - 1)]) / Rational(k);
    }
  }
  UniPoly p = UniPoly::constant(coef.back(), var);
  for (int k = n - 2; k >= 0; --k) {
    p = p * UniPoly::from_rationals({Rational(-k), Rational(1)}, var) + UniPoly::constant(coef[static_cast<std::size_t>(k)], var);
  }
  return p;
}

UniPoly compute_critical_value_poly(int level) {
  const UniPoly g = critical_orbit_poly(level).poly;
  const UniPoly dg = g.derivative();
  const int degree = (1 << (level - 1)) - 1;
  const UniPoly v = interpolate(eliminant_values(g, dg, degree + 1), 'a');
  if (v.degree() != degree) throw std::logic_error("critical-value polynomial has unexpected degree");
  return UniPoly::from_integers(v.primitive(), 'a');
}

std::mutex cache_mutex;
std::array<std::optional<UniPoly>, kMaxStrataLevel + 1> cache;
std::array<std::once_flag, kMaxStrataLevel + 1> cache_once;

}  // namespace

UniPoly critical_value_poly(int level) {
  check_level(level, 2);
  const auto idx = static_cast<std::size_t>(level);
  std::call_once(cache_once[idx], [&] {
    UniPoly v = compute_critical_value_poly(level);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[idx] = std::move(v);
  });
  std::lock_guard<std::mutex> lock(cache_mutex);
  return *cache[idx];
}

CriticalStratum exceptional_set(int level) {
  check_level(level, 2);
  CriticalStratum out;
  out.level = level;
  out.critical_values = critical_value_poly(level);
  UniPoly w = squarefree_part(out.critical_values);
  out.squarefree = w.degree() == out.critical_values.degree();
  UniPoly earlier = UniPoly::constant(Rational(1), 'a');
  for (int j = 2; j < level; ++j) earlier *= critical_value_poly(j);
  const UniPoly common = gcd(w, earlier);
  out.disjoint = common.degree() == 0;
  if (!out.disjoint) w = UniPoly::from_integers(divmod(w, common).first.primitive(), 'a');
  out.exceptional = w;
  out.count = w.degree();
  out.rational_roots = rational_roots(w);
  out.irreducible = w.degree() >= 1 && is_irreducible(w);
  return out;
}

NonsingularVerdict is_nonsingular(int level, const Rational& a) {
  check_level(level, 1);
  for (int j = 2; j <= level; ++j) {
    // V_j(a) is a nonzero multiple of this resultant.
    const UniPoly g = critical_orbit_poly(j).poly;
    if (resultant(g - UniPoly::constant(a, 'c'), g.derivative()).is_zero()) return {false, j};
  }
  return {true, 0};
}

SingularCount cumulative_singular_count(int level) {
  check_level(level, 2);
  UniPoly product = UniPoly::constant(Rational(1), 'a');
  for (int j = 2; j <= level; ++j) product *= critical_value_poly(j);
  SingularCount out;
  out.level = level;
  out.count = squarefree_part(product).degree();
  out.expected = (1 << level) - level - 1;
  out.equal = out.count == out.expected;
  out.asserted = level <= 6;
  return out;
}

TwoAdicAudit two_adic_audit(int level) {
  check_level(level, 2);
  TwoAdicAudit out;
  out.passed = true;
  for (int j = 2; j <= level; ++j) {
    AuditLevel al;
    al.level = j;
    al.polygon = newton_polygon(critical_value_poly(j), 2);
    al.all_negative = al.polygon.zero_roots == 0 &&
                      std::all_of(al.polygon.valuations.begin(), al.polygon.valuations.end(),
                                  [](const auto& vm) { return vm.first.sign() < 0; });
    out.passed = out.passed && al.all_negative;
    out.levels.push_back(std::move(al));
  }
  return out;
}

}  // namespace quadpre
