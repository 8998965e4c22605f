#pragma once

#include <gmpxx.h>

#include <vector>

namespace bcalc::detail {

/// Dense integer polynomial, coefficient i multiplies t^i. No trailing zeros.
using ZPoly = std::vector<mpz_class>;

/// Irreducible factors over Z of a primitive squarefree polynomial of degree >= 1
/// with nonzero constant term. Factors are primitive with positive leading coefficient.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f);

}  // namespace bcalc::detail
