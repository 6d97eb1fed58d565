// Exact integers and normalized rationals backed by GMP.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace quadpre {

using Integer = mpz_class;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& v) : q_(v) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p/q" or "p" (optional leading sign, decimal digits).
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& r, unsigned long e);

/// log max(|p|, q) for p/q in lowest terms; h(0) = 0.
double weil_height(const Rational& r);

/// Natural log of a positive integer, accurate for integers of any size.
double log_integer(const Integer& n);

/// Naive multiplicative height max(|p|, q).
Integer naive_height(const Rational& r);

/// p-adic valuation. `infinite` is set for r = 0.
struct ValuationResult {
  Integer prime;
  long valuation = 0;
  bool infinite = false;
};

bool is_prime(const Integer& n);

/// Throws std::invalid_argument when p is not prime.
ValuationResult padic_valuation(const Rational& r, const Integer& p);

/// v_p(n) for a nonzero integer; p assumed prime.
long integer_valuation(const Integer& n, const Integer& p);

/// Nonnegative square root when r is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Exact integer square root test.
std::optional<Integer> integer_sqrt(const Integer& n);

/// Canonical order used in search output: by denominator, then numerator.
bool height_order_less(const Rational& a, const Rational& b);

struct RationalHash {
  std::size_t operator()(const Rational& r) const;
};

}  // namespace quadpre
