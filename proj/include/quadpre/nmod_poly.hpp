// Dense polynomials over the prime field Z/pZ for word-sized odd p.
//
// Used by the factorization engine (distinct- and equal-degree splitting) and
// as a cheap coprimality filter in integer gcds.

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "quadpre/rational.hpp"

namespace quadpre::nmod {

using Poly = std::vector<std::uint64_t>;  // constant term first, trimmed

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

void trim(Poly& f);
inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

/// Reduces integer coefficients into [0, p).
Poly reduce(const std::vector<Integer>& f, std::uint64_t p);

Poly add(const Poly& f, const Poly& g, std::uint64_t p);
Poly sub(const Poly& f, const Poly& g, std::uint64_t p);
Poly mul(const Poly& f, const Poly& g, std::uint64_t p);
Poly scale(const Poly& f, std::uint64_t s, std::uint64_t p);
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, std::uint64_t p);
Poly rem(const Poly& f, const Poly& g, std::uint64_t p);
Poly monic(const Poly& f, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);

/// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly f, Poly g, std::uint64_t p);

/// Returns (d, s, t) with s f + t g = d, d monic.
struct Bezout {
  Poly d, s, t;
};
Bezout xgcd(const Poly& f, const Poly& g, std::uint64_t p);

/// base^e mod m, with e an arbitrary-size exponent.
Poly powmod(const Poly& base, const Integer& e, const Poly& m, std::uint64_t p);

bool is_squarefree(const Poly& f, std::uint64_t p);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, std::uint64_t p);

/// Splits a monic squarefree product of irreducibles of common degree d.
std::vector<Poly> equal_degree(const Poly& f, int d, std::uint64_t p, std::mt19937_64& rng);

/// Monic irreducible factors of a monic squarefree polynomial, sorted by
/// (degree, coefficients).
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p, std::mt19937_64& rng);

}  // namespace quadpre::nmod
