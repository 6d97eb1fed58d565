#include "quadpre/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "quadpre/nmod_poly.hpp"

namespace quadpre {

using zpoly::ZPoly;

UniPoly Factorization::expand(char var) const {
  UniPoly acc = UniPoly::constant(unit, var);
  for (const auto& [f, m] : factors) {
    for (int i = 0; i < m; ++i) acc *= f.renamed(var);
  }
  return acc;
}

std::vector<int> Factorization::degree_profile() const {
  std::vector<int> out;
  for (const auto& [f, m] : factors) {
    for (int i = 0; i < m; ++i) out.push_back(f.degree());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

const std::vector<std::uint64_t>& candidate_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 3; n < 20000; n += 2) {
      bool prime = true;
      for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(n);
    }
    return out;
  }();
  return primes;
}

namespace {

// ---- polynomial arithmetic modulo an integer m (coefficients in [0, m)) ----

void reduce_mod(ZPoly& f, const Integer& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  zpoly::trim(f);
}

ZPoly mul_mod(const ZPoly& f, const ZPoly& g, const Integer& m) {
  ZPoly out = zpoly::mul(f, g);
  reduce_mod(out, m);
  return out;
}

ZPoly add_mod(const ZPoly& f, const ZPoly& g, const Integer& m) {
  ZPoly out = zpoly::add(f, g);
  reduce_mod(out, m);
  return out;
}

ZPoly sub_mod(const ZPoly& f, const ZPoly& g, const Integer& m) {
  ZPoly out = zpoly::sub(f, g);
  reduce_mod(out, m);
  return out;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& f, const ZPoly& h, const Integer& m) {
  if (f.size() < h.size()) return {{}, f};
  ZPoly r = f;
  ZPoly q(f.size() - h.size() + 1);
  const std::size_t dh = h.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer coef = r[k + dh];
    mpz_fdiv_r(coef.get_mpz_t(), coef.get_mpz_t(), m.get_mpz_t());
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dh; ++j) mpz_submul(r[k + j].get_mpz_t(), coef.get_mpz_t(), h[j].get_mpz_t());
  }
  r.resize(dh);
  reduce_mod(q, m);
  reduce_mod(r, m);
  return {q, r};
}

ZPoly from_nmod(const nmod::Poly& f) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = Integer(static_cast<unsigned long>(f[i]));
  return out;
}

ZPoly symmetric(ZPoly f, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  zpoly::trim(f);
  return f;
}

struct LiftState {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step: from f = g h, s g + t h = 1 (mod m) with h monic
// to the same relations modulo m^2.
LiftState hensel_step(const ZPoly& f, const LiftState& in, const Integer& m) {
  const Integer M = m * m;
  ZPoly e = sub_mod(f, mul_mod(in.g, in.h, M), M);
  auto [q, r] = divmod_monic(mul_mod(in.s, e, M), in.h, M);
  LiftState out;
  out.g = add_mod(add_mod(in.g, mul_mod(in.t, e, M), M), mul_mod(q, in.g, M), M);
  out.h = add_mod(in.h, r, M);
  ZPoly b = sub_mod(add_mod(mul_mod(in.s, out.g, M), mul_mod(in.t, out.h, M), M), ZPoly{1}, M);
  auto [c, d] = divmod_monic(mul_mod(in.s, b, M), out.h, M);
  out.s = sub_mod(in.s, d, M);
  out.t = sub_mod(sub_mod(in.t, mul_mod(in.t, b, M), M), mul_mod(c, out.g, M), M);
  return out;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::logic_error("leading coefficient not invertible during Hensel lifting");
  }
  return inv;
}

// Lifts monic modular factors of f (f = lc(f) * prod factors mod p) to monic
// factors modulo p^(2^steps), splitting the factor list as a binary tree.
void lift_tree(const ZPoly& f, const std::vector<nmod::Poly>& factors, std::uint64_t p, int steps,
               const Integer& modulus, std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    ZPoly g = f;
    reduce_mod(g, modulus);
    const Integer inv = inverse_mod(g.back(), modulus);
    for (auto& c : g) c *= inv;
    reduce_mod(g, modulus);
    out.push_back(std::move(g));
    return;
  }
  const std::size_t half = factors.size() / 2;
  const std::vector<nmod::Poly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  const std::vector<nmod::Poly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());

  nmod::Poly h0{1};
  for (const auto& u : left) h0 = nmod::mul(h0, u, p);
  const nmod::Poly fbar = nmod::reduce(f, p);
  nmod::Poly g0 = nmod::divmod(fbar, h0, p).first;
  const auto bez = nmod::xgcd(g0, h0, p);
  if (nmod::degree(bez.d) != 0) throw std::logic_error("modular factors are not coprime");

  LiftState st{from_nmod(g0), from_nmod(h0), from_nmod(bez.s), from_nmod(bez.t)};
  Integer m(static_cast<unsigned long>(p));
  for (int i = 0; i < steps; ++i) {
    ZPoly fm = f;
    reduce_mod(fm, m * m);
    st = hensel_step(fm, st, m);
    m *= m;
  }
  lift_tree(st.h, left, p, steps, modulus, out);
  lift_tree(st.g, right, p, steps, modulus, out);
}

Integer l2_norm_ceil(const ZPoly& f) {
  Integer sum = 0;
  for (const auto& c : f) sum += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), sum.get_mpz_t());
  if (root * root < sum) root += 1;
  return root;
}

struct ModularChoice {
  std::uint64_t prime = 0;
  std::vector<nmod::Poly> factors;
};

constexpr int kPrimesCompared = 5;

ModularChoice choose_prime(const ZPoly& f, std::mt19937_64& rng) {
  ModularChoice best;
  int good = 0;
  for (const auto p : candidate_primes()) {
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    const nmod::Poly fp = nmod::reduce(f, p);
    if (nmod::degree(fp) != zpoly::degree(f) || !nmod::is_squarefree(fp, p)) continue;
    auto facs = nmod::factor_squarefree(nmod::monic(fp, p), p, rng);
    if (best.prime == 0 || facs.size() < best.factors.size()) {
      best.prime = p;
      best.factors = std::move(facs);
    }
    if (best.factors.size() == 1 || ++good == kPrimesCompared) break;
  }
  if (best.prime == 0) throw std::logic_error("no good prime found for factorization");
  return best;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ZPoly> zassenhaus(const ZPoly& f_in) {
  ZPoly f = zpoly::primitive_part(f_in);
  const int n = zpoly::degree(f);
  if (n <= 1) return {f};
  std::vector<ZPoly> out;
  if (f.front() == 0) {
    out.push_back(ZPoly{0, 1});
    f = ZPoly(f.begin() + 1, f.end());
    if (zpoly::degree(f) <= 1) {
      if (zpoly::degree(f) == 1) out.push_back(f);
      return out;
    }
  }

  std::mt19937_64 rng(kFactorSeed);
  const ModularChoice choice = choose_prime(f, rng);
  if (choice.factors.size() == 1) {
    out.push_back(f);
    return out;
  }

  const Integer lc = f.back();
  Integer bound;
  mpz_mul_2exp(bound.get_mpz_t(), l2_norm_ceil(f).get_mpz_t(), static_cast<mp_bitcnt_t>(zpoly::degree(f)));
  bound *= ::abs(lc);
  const Integer target = 2 * bound;
  const std::uint64_t p = choice.prime;
  Integer modulus(static_cast<unsigned long>(p));
  int steps = 0;
  while (modulus <= target) {
    modulus *= modulus;
    ++steps;
  }
  std::vector<ZPoly> lifted;
  lift_tree(f, choice.factors, p, steps, modulus, lifted);

  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly F = f;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      const Integer lcF = F.back();
      ZPoly G{lcF};
      for (const auto i : idx) G = mul_mod(G, lifted[remaining[i]], modulus);
      G = symmetric(G, modulus);
      if (G.empty()) continue;
      if (F.front() != 0 && G.front() != 0 && !mpz_divisible_p(Integer(lcF * F.front()).get_mpz_t(), G.front().get_mpz_t())) {
        continue;
      }
      const ZPoly candidate = zpoly::primitive_part(G);
      auto quotient = zpoly::exact_divide(F, candidate);
      if (!quotient) continue;
      out.push_back(candidate);
      F = zpoly::primitive_part(*quotient);
      std::vector<std::size_t> rest;
      for (std::size_t j = 0, k = 0; j < remaining.size(); ++j) {
        if (k < idx.size() && idx[k] == j) {
          ++k;
        } else {
          rest.push_back(remaining[j]);
        }
      }
      remaining = std::move(rest);
      found = true;
      break;
    } while (next_combination(idx, remaining.size()));
    if (!found) ++s;
  }
  if (zpoly::degree(F) > 0) out.push_back(F);
  return out;
}

}  // namespace detail

Factorization factor_polynomial(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factorization of the zero polynomial");
  Factorization out;
  out.unit = p.content();
  const auto parts = zpoly::squarefree_decomposition(p.primitive());
  std::vector<std::pair<ZPoly, int>> collected;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (zpoly::degree(parts[i]) <= 0) continue;
    for (auto& g : detail::zassenhaus(parts[i])) collected.emplace_back(std::move(g), static_cast<int>(i) + 1);
  }
  std::sort(collected.begin(), collected.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return zpoly::canonical_less(a.first, b.first);
    return a.second < b.second;
  });
  for (auto& [g, m] : collected) out.factors.emplace_back(UniPoly::from_integers(g, p.variable()), m);
  return out;
}

bool is_irreducible(const UniPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("irreducibility of a constant polynomial");
  const auto f = factor_polynomial(p);
  return f.factors.size() == 1 && f.factors.front().second == 1;
}

}  // namespace quadpre
