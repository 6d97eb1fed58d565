#include "quadpre/heights.hpp"

#include <algorithm>
#include <cmath>
#include <gmpxx.h>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace quadpre {

namespace {

// ---- integer factorization (denominators only) --------------------------

Integer pollard_brent(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long seed = 1;; ++seed) {
    Integer y = seed + 1, c = seed, m = 64, g = 1, r = 1, q = 1, x, ys;
    auto step = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
    do {
      x = y;
      for (Integer i = 0; i < r; ++i) y = step(y);
      Integer k = 0;
      do {
        ys = y;
        for (Integer i = 0; i < std::min(m, Integer(r - k)); ++i) {
          y = step(y);
          q = (q * ::abs(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        Integer d = ::abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_primes(Integer n, std::map<Integer, int>& out) {
  n = ::abs(n);
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    ++out[n];
    return;
  }
  const Integer d = pollard_brent(n);
  collect_primes(d, out);
  collect_primes(n / d, out);
}

// ---- finite places -------------------------------------------------------

Integer int_pow(const Integer& p, long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

// Unit part of a nonzero rational mod p^k.
Integer unit_mod(const Rational& r, const Integer& p, const Integer& pk) {
  Integer num = r.numerator(), den = r.denominator();
  while (num % p == 0) num /= p;
  while (den % p == 0) den /= p;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pk.get_mpz_t());
  Integer out = (num * inv) % pk;
  if (out < 0) out += pk;
  return out;
}

constexpr long kExactBits = 1 << 16;
constexpr long kMaxPadicDigits = 1 << 13;

struct PadicOutcome {
  bool escaped = false;
  int n = 0;
  long v = 0;  // valuation at escape
};

// Iterates valuations of f_c^n(z) at a prime with v_p(c) = gamma < 0. The
// exact orbit is followed while it is small; after that w = p^v u with the
// unit u known mod p^prec. A cancellation that eats all known digits returns
// nullopt so the caller can retry with more digits.
std::optional<PadicOutcome> padic_orbit(const Rational& z, const Rational& c, const Integer& p, long gamma, int cap,
                                        long digits) {
  const Integer pk = int_pow(p, digits);
  const Integer uc = unit_mod(c, p, pk);
  Rational w = z;
  bool exact = true;
  bool zero = false;
  long v = 0, prec = digits;
  Integer u;
  for (int n = 0;; ++n) {
    if (exact) {
      zero = w.is_zero();
      if (!zero) v = padic_valuation(w, p).valuation;
    }
    if (!zero && 2 * v < gamma) return PadicOutcome{true, n, v};
    if (n == cap) return PadicOutcome{false, n, 0};
    if (exact) {
      const long bits = static_cast<long>(mpz_sizeinbase(w.numerator().get_mpz_t(), 2) +
                                          mpz_sizeinbase(w.denominator().get_mpz_t(), 2));
      if (bits < kExactBits) {
        w = w * w + c;
        continue;
      }
      exact = false;
      u = unit_mod(w, p, pk);
      prec = digits;
    }
    if (zero) {
      v = gamma, u = uc, prec = digits, zero = false;
    } else if (2 * v > gamma) {
      const long shift = 2 * v - gamma;
      prec = std::min(digits, prec + shift);
      u = shift >= digits ? uc : (uc + int_pow(p, shift) * u * u) % pk;
      v = gamma;
    } else {
      const Integer pp = int_pow(p, prec);
      Integer s = (u * u + uc) % pp;
      if (s == 0) return std::nullopt;
      long t = 0;
      while (s % p == 0) s /= p, ++t;
      v = gamma + t;
      prec -= t;
      u = s % int_pow(p, prec);
    }
  }
}

FiniteLocalHeight local_height(const Rational& z, const Rational& c, const Integer& p, int cap) {
  FiniteLocalHeight out;
  out.prime = p;
  const auto vc = padic_valuation(c, p);
  if (vc.infinite || vc.valuation >= 0) {
    const long vz = z.is_zero() ? 0 : padic_valuation(z, p).valuation;
    out.coefficient = Rational(std::max(0L, -vz));
    return out;
  }
  const long gamma = vc.valuation;
  std::optional<PadicOutcome> res;
  for (long digits = 64; digits <= kMaxPadicDigits && !res; digits *= 2) res = padic_orbit(z, c, p, gamma, cap, digits);
  if (res && res->escaped) {
    out.iterations = res->n;
    out.coefficient = Rational(Integer(-res->v), Integer(Integer(1) << res->n));
    return out;
  }
  // Bounded so far: lambda_p lies in [0, 2^-n (-gamma/2) log p].
  const int n = res ? res->n : 0;
  out.iterations = n;
  out.escaped = false;
  out.coefficient = Rational(0);
  out.error = std::ldexp(static_cast<double>(-gamma), -n) * log_integer(p);
  return out;
}

// ---- archimedean place ---------------------------------------------------

struct ArchOutcome {
  double value = 0;
  double error = 0;
  int escape = -1;
};

double log_abs(const mpf_class& x) {
  long e = 0;
  const double d = mpf_get_d_2exp(&e, x.get_mpf_t());
  return std::log(std::fabs(d)) + static_cast<double>(e) * std::numbers::ln2;
}

double to_double_up(const mpf_class& x) {
  const double d = x.get_d();
  return std::nextafter(std::fabs(d), std::numeric_limits<double>::infinity());
}

ArchOutcome archimedean(const Rational& z, const Rational& c, int cap, unsigned bits) {
  const double cabs = std::fabs(c.to_double());
  const mpf_class cf(c.raw(), bits);
  mpf_class radius(std::max(1.0, cabs), bits);
  radius = 1 + sqrt(radius);
  radius *= 1 + std::ldexp(1.0, -40);

  // rel is a per-operation relative rounding bound; errors tracked in a short mpf.
  mpf_class rel(1, 64);
  mpf_div_2exp(rel.get_mpf_t(), rel.get_mpf_t(), bits - 8);
  mpf_class w(z.raw(), bits);
  mpf_class err = abs(w) * rel;
  err += abs(cf) * rel;
  mpf_class aw(0, bits);
  mpf_class tiny(1, 64);
  mpf_div_2exp(tiny.get_mpf_t(), tiny.get_mpf_t(), 4 * bits);
  ArchOutcome out;
  for (int n = 0; n <= cap; ++n) {
    aw = abs(w);
    if (aw != 0 && aw < tiny) {
      // Flush to zero before the exponent of w^(2^n) overflows.
      err += aw;
      w = 0;
      aw = 0;
    }
    if (aw - err > radius) {
      out.escape = n;
      break;
    }
    if (n == cap) break;
    mpf_class next(w * w + cf, bits);
    err = err * (2 * aw + err) + rel * (aw * aw + abs(next) + abs(cf));
    w = next;
  }
  if (out.escape < 0) {
    // G(w) <= log max(|w|, R) + log 2 for any w; h_inf = 2^-cap G(w_cap) >= 0.
    mpf_class top = aw + err;
    if (top < radius) top = radius;
    out.error = std::ldexp(log_abs(top) + std::numbers::ln2, -cap);
    return out;
  }
  // Log-domain tail: L_{m+1} = 2 L_m + log|1 + c / w_m^2|.
  const int n = out.escape;
  double L = log_abs(w);
  const double cd = c.to_double();
  int m = n;
  double x = 0;
  for (; m < n + 1000; ++m) {
    x = cd * std::exp(-2 * L);
    if (std::fabs(x) < 1e-40) break;
    L = 2 * L + std::log1p(x);
  }
  out.value = std::ldexp(L, -m);
  const double slack = std::ldexp(4 * std::fabs(x), -m);
  // Sensitivity of the Green function to the initial perturbation at escape.
  const mpf_class margin = aw - err;
  const double rel_err = to_double_up(err / margin);
  out.error = slack + std::ldexp(rel_err * (1 + 4 * (1 + cabs)), -n);
  return out;
}

}  // namespace

HeightReport canonical_height(const Rational& z, const Rational& c, double tol, const HeightOptions& opts) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (opts.archimedean_cap < 1 || opts.padic_cap < 1) throw std::invalid_argument("iteration caps must be positive");
  HeightReport out;
  out.z = z;
  out.c = c;

  const double r = 1 + std::sqrt(std::max(1.0, std::fabs(c.to_double())));
  unsigned bits = 128 + static_cast<unsigned>(opts.archimedean_cap * std::ceil(std::log2(2 * r + 2)));
  ArchOutcome arch = archimedean(z, c, opts.archimedean_cap, bits);
  for (int retry = 0; retry < 3 && arch.error >= tol / 2; ++retry) {
    bits *= 2;
    arch = archimedean(z, c, opts.archimedean_cap, bits);
  }
  out.archimedean = arch.value;
  out.archimedean_error = arch.error;
  out.escape_iteration = arch.escape;

  std::map<Integer, int> primes;
  collect_primes(z.denominator(), primes);
  collect_primes(c.denominator(), primes);
  double finite_sum = 0;
  double error = arch.error;
  for (const auto& [p, mult] : primes) {
    (void)mult;
    FiniteLocalHeight lh = local_height(z, c, p, opts.padic_cap);
    const double lp = log_integer(p);
    finite_sum += lh.coefficient.to_double() * lp;
    error += lh.error;
    out.finite.push_back(std::move(lh));
  }
  out.value = arch.value + finite_sum;
  error += 1e-14 * (1 + std::fabs(out.value));
  out.error_bound = error;
  out.flagged = error >= tol;
  return out;
}

double height_gap_constant(const Rational& c) { return weil_height(c) + std::numbers::ln2; }

PreperiodicReport preperiodic_orbit(const Rational& z, const Rational& c) {
  // h(w) > h(c) + log 2  <=>  H(w) > 2 H(c), decided in integers.
  const Integer limit = 2 * naive_height(c);
  PreperiodicReport out;
  std::unordered_map<Rational, int, RationalHash> seen;
  Rational w = z;
  for (int n = 0;; ++n) {
    out.orbit.push_back(w);
    if (naive_height(w) > limit) {
      out.escape_index = n;
      return out;
    }
    const auto [it, fresh] = seen.emplace(w, n);
    if (!fresh) {
      out.preperiodic = true;
      out.repeat_index = n;
      out.repeat_of = it->second;
      return out;
    }
    w = w * w + c;
  }
}

bool is_preperiodic(const Rational& z, const Rational& c) { return preperiodic_orbit(z, c).preperiodic; }

EpsilonDemo epsilon_demo(const std::vector<std::pair<Rational, Rational>>& points, double tol) {
  const double constant = (std::log(5.0) - 2 * std::numbers::ln2) / 16;
  EpsilonDemo out;
  for (const auto& [x0, c] : points) {
    Rational w = x0;
    for (int i = 0; i < 3; ++i) w = w * w + c;
    if (!w.is_zero()) {
      throw std::invalid_argument("(" + x0.to_string() + ", " + c.to_string() + ") does not satisfy f_c^3(x0) = 0");
    }
    EpsilonRow row;
    row.x0 = x0;
    row.c = c;
    row.height_x0 = canonical_height(x0, c, tol).value;
    row.height_c = canonical_height(c, c, tol).value;
    row.residual = std::fabs(row.height_x0 - row.height_c / 16);
    row.relation_holds = row.residual < tol;
    row.inequality_applies = abs(c) > Rational(4);
    row.inequality_bound = weil_height(c) / 16 + constant;
    if (row.inequality_applies) row.inequality_holds = row.height_x0 <= row.inequality_bound + tol;
    out.passed = out.passed && row.relation_holds && row.inequality_holds;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace quadpre
