// Factorization of univariate polynomials over Q into irreducibles.
//
// Pipeline: squarefree decomposition, then for each squarefree primitive
// piece a Zassenhaus search: factor modulo a small good prime (distinct-degree
// followed by Cantor-Zassenhaus equal-degree splitting), Hensel-lift the
// modular factors past twice the Landau-Mignotte bound, and recombine by
// subset search in increasing subset size.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quadpre/upoly.hpp"

namespace quadpre {

/// Seed of the equal-degree splitting generator. Fixed so factorizations are
/// bit-reproducible; reported in every Factorization.
inline constexpr std::uint64_t kFactorSeed = 0x5eed0f2a11ULL;

struct Factorization {
  Rational unit;
  /// Irreducible primitive factors (positive leading coefficient) with
  /// multiplicities, sorted by degree then coefficients.
  std::vector<std::pair<UniPoly, int>> factors;
  std::uint64_t seed = kFactorSeed;

  /// unit * prod factor^mult.
  UniPoly expand(char var) const;
  /// Degrees with multiplicity, ascending.
  std::vector<int> degree_profile() const;
};

/// Throws std::invalid_argument for the zero polynomial.
Factorization factor_polynomial(const UniPoly& p);

/// Throws std::invalid_argument for constant input.
bool is_irreducible(const UniPoly& p);

namespace detail {

/// Irreducible factors of a primitive squarefree integer polynomial with
/// positive leading coefficient.
std::vector<zpoly::ZPoly> zassenhaus(const zpoly::ZPoly& f);

/// Smallest odd primes tried in order when choosing the modulus.
const std::vector<std::uint64_t>& candidate_primes();

}  // namespace detail

}  // namespace quadpre
