#include "quadpre/nmod_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadpre::nmod {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly reduce(const std::vector<Integer>& f, std::uint64_t p) {
  Poly out(f.size());
  Integer r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

Poly add(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = (out[i] + g[i]) % p;
  trim(out);
  return out;
}

Poly sub(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = (out[i] + p - g[i]) % p;
  trim(out);
  return out;
}

Poly mul(const Poly& f, const Poly& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  std::vector<unsigned __int128> acc(f.size() + g.size() - 1, 0);
  // p < 2^32, so each product fits in 64 bits and the 128-bit sums cannot overflow.
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(f[i]) * g[j];
    }
  }
  Poly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint64_t>(acc[i] % p);
  trim(out);
  return out;
}

Poly scale(const Poly& f, std::uint64_t s, std::uint64_t p) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mulmod(f[i], s, p);
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, std::uint64_t p) {
  if (g.empty()) throw std::domain_error("polynomial division by zero mod p");
  if (f.size() < g.size()) return {{}, f};
  Poly r = f;
  Poly q(f.size() - g.size() + 1, 0);
  const std::uint64_t inv = invmod(g.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t coef = mulmod(r[k + g.size() - 1], inv, p);
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      r[k + j] = (r[k + j] + p - mulmod(coef, g[j], p)) % p;
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly rem(const Poly& f, const Poly& g, std::uint64_t p) { return divmod(f, g, p).second; }

Poly monic(const Poly& f, std::uint64_t p) {
  if (f.empty()) return f;
  return scale(f, invmod(f.back(), p), p);
}

Poly derivative(const Poly& f, std::uint64_t p) {
  if (f.size() <= 1) return {};
  Poly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = mulmod(f[i], i % p, p);
  trim(out);
  return out;
}

Poly gcd(Poly f, Poly g, std::uint64_t p) {
  while (!g.empty()) {
    Poly r = rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return monic(f, p);
}

Bezout xgcd(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly r0 = f, r1 = g;
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  const std::uint64_t inv = invmod(r0.back(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

Poly powmod(const Poly& base, const Integer& e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  result = rem(result, m, p);
  const Poly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

bool is_squarefree(const Poly& f, std::uint64_t p) {
  if (degree(f) <= 0) return true;
  return degree(gcd(f, derivative(f, p), p)) == 0;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f_in, std::uint64_t p) {
  std::vector<std::pair<Poly, int>> out;
  Poly f = monic(f_in, p);
  const Poly x{0, 1};
  Poly h = rem(x, f, p);
  const Integer pz(static_cast<unsigned long>(p));
  int d = 0;
  while (degree(f) >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, pz, f, p);
    Poly g = gcd(sub(h, x, p), f, p);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, degree(f));
  return out;
}

std::vector<Poly> equal_degree(const Poly& f, int d, std::uint64_t p, std::mt19937_64& rng) {
  const int n = degree(f);
  if (n <= d) return {monic(f, p)};
  Integer exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), p, static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  for (;;) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& v : a) v = coef(rng);
    trim(a);
    if (degree(a) <= 0) continue;
    Poly g = gcd(a, f, p);
    if (degree(g) <= 0) {
      Poly b = powmod(a, exponent, f, p);
      b = sub(b, Poly{1}, p);
      g = gcd(b, f, p);
    }
    if (degree(g) > 0 && degree(g) < n) {
      auto left = equal_degree(g, d, p, rng);
      auto right = equal_degree(divmod(f, g, p).first, d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (const auto& [part, d] : distinct_degree(f, p)) {
    auto pieces = equal_degree(part, d, p, rng);
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace quadpre::nmod
