#pragma once

#include <array>
#include <cstdint>

#include "bcalc/poly/ring.hpp"

namespace bcalc {

/// Exponent vector. Entries past the ring size stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  bool is_one() const { return deg == 0; }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  void recompute_degree() {
    deg = 0;
    for (auto x : e) deg += x;
  }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
/// a / b, requires b | a.
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
Monomial mono_var(std::size_t i, unsigned power = 1);

/// Monomial orders: lex, degrevlex, and the block order used for elimination
/// (degrevlex on the first `block` variables, then degrevlex on the rest).
struct MonomialOrder {
  enum class Kind { lex, degrevlex, block };
  Kind kind = Kind::degrevlex;
  unsigned block = 0;

  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
  static MonomialOrder elimination(unsigned k) { return {Kind::block, k}; }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

  bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
};

int degrevlex_compare(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi);

}  // namespace bcalc
