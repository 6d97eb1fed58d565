// Integer-coefficient polynomial kernels shared by the rational polynomial
// type and the factorization engine. Coefficients are stored constant term
// first with no trailing zeros; the zero polynomial is the empty vector.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quadpre/rational.hpp"

namespace quadpre::zpoly {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& f);
inline int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
inline const Integer& lead(const ZPoly& f) { return f.back(); }

/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
Integer content(const ZPoly& f);

/// f / content(f), normalized to a positive leading coefficient.
ZPoly primitive_part(const ZPoly& f);

ZPoly add(const ZPoly& f, const ZPoly& g);
ZPoly sub(const ZPoly& f, const ZPoly& g);
ZPoly mul(const ZPoly& f, const ZPoly& g);
ZPoly scale(const ZPoly& f, const Integer& s);
ZPoly derivative(const ZPoly& f);
Integer evaluate(const ZPoly& f, const Integer& x);

/// lc(g)^(deg f - deg g + 1) f = q g + r.
std::pair<ZPoly, ZPoly> pseudo_divmod(const ZPoly& f, const ZPoly& g);

/// Quotient when g divides f in Z[x]; nullopt otherwise.
std::optional<ZPoly> exact_divide(const ZPoly& f, const ZPoly& g);

/// Primitive gcd with positive leading coefficient.
ZPoly gcd(const ZPoly& f, const ZPoly& g);

/// Resultant via the subresultant remainder sequence. Sign convention:
/// Res(A, B) = lc(B)^deg(A) * prod_{B(beta)=0} A(beta).
Integer resultant(const ZPoly& a, const ZPoly& b);

/// Yun's algorithm on a primitive polynomial: factors s_1, s_2, ... with
/// f = prod s_i^i (up to sign); entries may be constant 1.
std::vector<ZPoly> squarefree_decomposition(const ZPoly& f);

/// Product of the distinct irreducible factors (primitive, positive lead).
ZPoly squarefree_part(const ZPoly& f);

/// Coefficient-wise comparison used for canonical ordering: degree first,
/// then coefficients from the leading term down.
bool canonical_less(const ZPoly& a, const ZPoly& b);

}  // namespace quadpre::zpoly
