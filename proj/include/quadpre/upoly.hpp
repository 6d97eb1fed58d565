// Dense univariate polynomials over Q in content x primitive form.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadpre/rational.hpp"
#include "quadpre/zpoly.hpp"

namespace quadpre {

/// A polynomial with rational coefficients, stored as content * primitive,
/// where the primitive part has coprime integer coefficients and a positive
/// leading coefficient. The zero polynomial has content 0 and no
/// coefficients. Arithmetic between polynomials requires matching variable
/// names.
class UniPoly {
 public:
  explicit UniPoly(char var = 'x') : var_(var) {}

  static UniPoly from_integers(const std::vector<Integer>& coeffs, char var = 'x');
  static UniPoly from_rationals(const std::vector<Rational>& coeffs, char var = 'x');
  static UniPoly constant(const Rational& value, char var = 'x');
  static UniPoly monomial(const Rational& coeff, int exponent, char var = 'x');
  static UniPoly indeterminate(char var = 'x') { return monomial(Rational(1), 1, var); }

  /// Parses "c^4 + 2*c^3 - 1/2*c + 3" (terms in any order). The variable is
  /// the single letter used; `fallback_var` applies when the text is constant.
  static UniPoly parse(std::string_view text, char fallback_var = 'x');

  char variable() const { return var_; }
  const Rational& content() const { return content_; }
  const zpoly::ZPoly& primitive() const { return prim_; }

  bool is_zero() const { return prim_.empty(); }
  int degree() const { return static_cast<int>(prim_.size()) - 1; }
  Rational coefficient(int i) const;
  Rational leading() const { return coefficient(degree()); }
  std::vector<Rational> coefficients() const;

  /// Same polynomial under another variable name.
  UniPoly renamed(char var) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

  UniPoly derivative() const;
  Rational evaluate(const Rational& at) const;

  /// this(inner): substitutes `inner` for this polynomial's variable. The
  /// result lives in inner's variable.
  UniPoly compose(const UniPoly& inner) const;

  /// Canonical descending text form.
  std::string to_string() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.var_ == b.var_ && a.content_ == b.content_ && a.prim_ == b.prim_;
  }

 private:
  static UniPoly normalized(zpoly::ZPoly scaled, const Rational& factor, char var);
  void require_same_variable(const UniPoly& o, const char* op) const;

  char var_ = 'x';
  Rational content_;
  zpoly::ZPoly prim_;
};

/// Quotient and remainder over Q.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic-normalized gcd over Q, returned as a primitive polynomial with
/// positive leading coefficient (content 1).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Res(A, B) = lc(B)^deg(A) * prod_{B(beta)=0} A(beta). Both-zero input
/// throws std::invalid_argument.
Rational resultant(const UniPoly& a, const UniPoly& b);

/// Product of distinct irreducible factors, primitive with positive lead.
UniPoly squarefree_part(const UniPoly& p);

/// Rational roots, ascending. Uses the divisor test when the extreme
/// coefficients are small enough to factor by trial division and falls back
/// to the linear factors of the full factorization otherwise.
std::vector<Rational> rational_roots(const UniPoly& p);

/// Divisor test only: candidate p/q with p | a_0 and q | a_n, filtered by the
/// Cauchy root bound. Throws if the coefficients are too large to factor.
std::vector<Rational> rational_roots_by_divisors(const UniPoly& p);

struct NewtonPolygon {
  Integer prime;
  /// (root valuation, number of roots) ascending by valuation.
  std::vector<std::pair<Rational, int>> valuations;
  /// Roots at zero (valuation +infinity).
  int zero_roots = 0;
};

/// Lower convex hull of (i, v_p(a_i)) reported as root valuations: a
/// segment of length l and slope s contributes l roots of valuation -s.
NewtonPolygon newton_polygon(const UniPoly& p, const Integer& prime);

}  // namespace quadpre
