#include "quadpre/zpoly.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "quadpre/nmod_poly.hpp"

namespace quadpre::zpoly {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.empty()) return {};
  Integer g = content(f);
  if (f.back() < 0) g = -g;
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_divexact(out[i].get_mpz_t(), f[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

ZPoly add(const ZPoly& f, const ZPoly& g) {
  ZPoly out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] += g[i];
  trim(out);
  return out;
}

ZPoly sub(const ZPoly& f, const ZPoly& g) {
  ZPoly out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] -= g[i];
  trim(out);
  return out;
}

ZPoly mul(const ZPoly& f, const ZPoly& g) {
  if (f.empty() || g.empty()) return {};
  ZPoly out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), f[i].get_mpz_t(), g[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

ZPoly scale(const ZPoly& f, const Integer& s) {
  if (s == 0) return {};
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * s;
  return out;
}

ZPoly derivative(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
  trim(out);
  return out;
}

Integer evaluate(const ZPoly& f, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

std::pair<ZPoly, ZPoly> pseudo_divmod(const ZPoly& f, const ZPoly& g) {
  if (g.empty()) throw std::domain_error("pseudo-division by zero polynomial");
  const int df = degree(f), dg = degree(g);
  if (df < dg) return {{}, f};
  ZPoly r = f;
  ZPoly q(static_cast<std::size_t>(df - dg + 1));
  const Integer& lc = g.back();
  for (int k = df; k >= dg; --k) {
    // r <- lc * r - r[k] x^(k-dg) g, q <- lc * q + r[k] x^(k-dg)
    const Integer top = r[static_cast<std::size_t>(k)];
    for (auto& c : q) c *= lc;
    q[static_cast<std::size_t>(k - dg)] += top;
    for (int i = 0; i <= k; ++i) r[static_cast<std::size_t>(i)] *= lc;
    for (int j = 0; j <= dg; ++j) {
      mpz_submul(r[static_cast<std::size_t>(k - dg + j)].get_mpz_t(), top.get_mpz_t(),
                 g[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

std::optional<ZPoly> exact_divide(const ZPoly& f, const ZPoly& g) {
  if (g.empty()) throw std::domain_error("division by zero polynomial");
  if (f.empty()) return ZPoly{};
  const int df = degree(f), dg = degree(g);
  if (df < dg) return std::nullopt;
  ZPoly r = f;
  ZPoly q(static_cast<std::size_t>(df - dg + 1));
  const Integer& lc = g.back();
  Integer rem;
  for (int k = df; k >= dg; --k) {
    auto& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    auto& qc = q[static_cast<std::size_t>(k - dg)];
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    if (rem != 0) return std::nullopt;
    for (int j = 0; j <= dg; ++j) {
      mpz_submul(r[static_cast<std::size_t>(k - dg + j)].get_mpz_t(), qc.get_mpz_t(),
                 g[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  for (const auto& c : r) {
    if (c != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

namespace {

// Primes just below 2^30; a modular gcd of degree 0 at a prime dividing
// neither leading coefficient proves the integer gcd is constant.
constexpr std::array<std::uint64_t, 3> kFilterPrimes = {1073741789ULL, 1073741783ULL, 1073741741ULL};

bool coprime_by_reduction(const ZPoly& f, const ZPoly& g) {
  for (const auto p : kFilterPrimes) {
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p) || mpz_divisible_ui_p(g.back().get_mpz_t(), p)) continue;
    const auto fp = nmod::reduce(f, p);
    const auto gp = nmod::reduce(g, p);
    if (nmod::degree(nmod::gcd(fp, gp, p)) == 0) return true;
  }
  return false;
}

}  // namespace

ZPoly gcd(const ZPoly& f, const ZPoly& g) {
  if (f.empty()) return primitive_part(g);
  if (g.empty()) return primitive_part(f);
  if (degree(f) == 0 || degree(g) == 0) return ZPoly{1};
  if (coprime_by_reduction(f, g)) return ZPoly{1};
  ZPoly a = primitive_part(f);
  ZPoly b = primitive_part(g);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_divmod(a, b).second;
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

namespace {

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Integer divexact(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// det Sylvester(A, B) = lc(A)^deg(B) prod_{A(alpha)=0} B(alpha), computed with
// the subresultant remainder sequence.
Integer sylvester_resultant(ZPoly A, ZPoly B) {
  if (A.empty() || B.empty()) return 0;
  const Integer a = content(A), b = content(B);
  const Integer t = ipow(a, static_cast<unsigned long>(degree(B))) * ipow(b, static_cast<unsigned long>(degree(A)));
  for (auto& c : A) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
  for (auto& c : B) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b.get_mpz_t());
  Integer g = 1, h = 1;
  int s = 1;
  if (degree(A) < degree(B)) {
    std::swap(A, B);
    if (degree(A) % 2 == 1 && degree(B) % 2 == 1) s = -1;
  }
  while (degree(B) > 0) {
    const int delta = degree(A) - degree(B);
    if (degree(A) % 2 == 1 && degree(B) % 2 == 1) s = -s;
    ZPoly R = pseudo_divmod(A, B).second;
    A = std::move(B);
    if (R.empty()) return 0;
    const Integer divisor = g * ipow(h, static_cast<unsigned long>(delta));
    for (auto& c : R) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    B = std::move(R);
    g = A.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = divexact(ipow(g, static_cast<unsigned long>(delta)), ipow(h, static_cast<unsigned long>(delta - 1)));
    }
  }
  const auto dA = static_cast<unsigned long>(degree(A));
  const Integer lcB = B.back();
  if (dA == 0) {
    h = 1;
  } else {
    h = divexact(ipow(lcB, dA), ipow(h, dA - 1));
  }
  return s * t * h;
}

}  // namespace

Integer resultant(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return 0;
  Integer r = sylvester_resultant(a, b);
  if ((degree(a) * degree(b)) % 2 == 1) r = -r;
  return r;
}

std::vector<ZPoly> squarefree_decomposition(const ZPoly& f_in) {
  ZPoly f = primitive_part(f_in);
  if (degree(f) <= 0) return {};
  const ZPoly df = derivative(f);
  const ZPoly b = gcd(f, df);
  ZPoly c = *exact_divide(f, b);
  ZPoly d = sub(*exact_divide(df, b), derivative(c));
  std::vector<ZPoly> out;
  while (degree(c) > 0) {
    ZPoly a = gcd(c, d);
    c = *exact_divide(c, a);
    d = sub(*exact_divide(d, a), derivative(c));
    out.push_back(std::move(a));
  }
  return out;
}

ZPoly squarefree_part(const ZPoly& f_in) {
  ZPoly f = primitive_part(f_in);
  if (degree(f) <= 0) return f;
  const ZPoly g = gcd(f, derivative(f));
  return primitive_part(*exact_divide(f, g));
}

bool canonical_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace quadpre::zpoly
