#pragma once

#include <utility>
#include <vector>

#include "bcalc/poly/polynomial.hpp"

namespace bcalc {

struct Factorization {
  Rational unit = 1;
  /// Irreducible, primitive, positive leading coefficient, pairwise distinct.
  std::vector<std::pair<Polynomial, unsigned>> factors;

  Polynomial expand(const RingPtr& ring) const;
};

/// Irreducible factorization over Q. Desk scale: the Kronecker image degree is capped.
Factorization factor_principal(const Polynomial& f);

/// Pairwise coprime squarefree parts s_k with f = unit * prod s_k^k.
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& f);

/// Generator of the radical of (f).
Polynomial squarefree_part(const Polynomial& f);

}  // namespace bcalc
