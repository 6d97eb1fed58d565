// Symbolic objects of the quadratic family f_c(x) = x^2 + c.

#pragma once

#include <string>
#include <vector>

#include "quadpre/rational.hpp"
#include "quadpre/upoly.hpp"

namespace quadpre {

/// Largest level for which bivariate iterates are expanded (grid 257 x 129).
inline constexpr int kMaxBivariateLevel = 8;

/// Dense polynomial in (x, c) with rational coefficients. Row i holds the
/// coefficients of x^i as a vector indexed by the power of c. Trailing zero
/// rows and columns are trimmed.
class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly x();
  static BiPoly c();
  static BiPoly constant(const Rational& v);
  /// Lifts a polynomial in c.
  static BiPoly from_c_poly(const UniPoly& p);

  bool is_zero() const { return rows_.empty(); }
  /// Degree in x (-1 for zero).
  int xdeg() const { return static_cast<int>(rows_.size()) - 1; }
  /// Degree in c (-1 for zero).
  int cdeg() const;
  Rational coefficient(int i, int j) const;
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

  /// Substitutes `inner` for x.
  BiPoly substitute_x(const BiPoly& inner) const;

  /// Sets x = 0, leaving a polynomial in c.
  UniPoly at_x_zero() const;

  /// Specializes c to a rational, leaving a polynomial in x.
  UniPoly at_c(const Rational& c) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }

 private:
  void trim();
  std::vector<std::vector<Rational>> rows_;
};

struct CriticalOrbit {
  int level = 0;
  UniPoly poly{'c'};
};

/// g_j(c) = f_c^j(0), from g_1 = c and g_j = g_{j-1}^2 + c. Requires j >= 1.
CriticalOrbit critical_orbit_poly(int level);

/// f_c^N(x) as a bivariate polynomial. N = 0 gives x (identity iterate).
/// Throws std::out_of_range beyond kMaxBivariateLevel.
BiPoly iterate_bipoly(int level);

/// f_c^k(x) - t as a polynomial in x for fixed rationals c, t.
UniPoly specialized_iterate(int k, const Rational& c, const Rational& t);

enum class Identity { FixedPoint, TwoCycle, KFamily };

std::string identity_name(Identity which);

/// Outcome of expanding one of the family identities symbolically.
struct IdentityRecord {
  Identity which;
  /// Residual polynomials, all of which must be zero.
  std::vector<UniPoly> residuals;
  /// Degrees of the expanded composites before cancellation.
  std::vector<int> witness_degrees;
  bool holds = false;
};

/// fixed point:  f_{a-a^2}(a) - a
/// two-cycle:    f_{-a^2-a-1}(a) + a + 1  and  f_{-a^2-a-1}(-a-1) - a
/// k-family:     f_{-k^2-k+1}^2(k) - (-3k + 2)
IdentityRecord verify_identity(Identity which);

/// f_c^N(x) + 1/4 = (h^2 + h + c + 1/2)(h^2 - h + c + 1/2), h = f_c^(N-2)(x).
struct QuarterSplitting {
  int level = 0;
  BiPoly plus;
  BiPoly minus;
};

/// Builds both factors and checks the product identity exactly; a failed
/// identity throws MathError. Requires 2 <= N <= kMaxBivariateLevel.
QuarterSplitting quarter_splitting(int level);

}  // namespace quadpre
