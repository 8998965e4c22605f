#pragma once

#include <optional>
#include <vector>

#include "bcalc/poly/polynomial.hpp"

namespace bcalc {

/// Reduced Groebner basis (monic, sorted by increasing leading monomial).
/// The zero ideal yields an empty basis. Throws resource_limit past the caps.
std::vector<Polynomial> groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order);

/// Fully reduced remainder of f modulo `basis` in `order`.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Cofactors c_i with f = sum c_i * gens[i], or nullopt if f is not in the ideal.
std::optional<std::vector<Polynomial>> lift(const Polynomial& f, const std::vector<Polynomial>& gens);

}  // namespace bcalc
