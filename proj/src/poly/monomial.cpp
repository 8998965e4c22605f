#include "bcalc/poly/monomial.hpp"

#include <algorithm>

#include "bcalc/errors.hpp"

namespace bcalc {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a.e[i]) + b.e[i];
    if (s > 0xFFFFu) fail(ErrorCode::resource_limit, "exponent overflow");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  r.deg = a.deg + b.deg;
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  r.recompute_degree();
  return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  r.recompute_degree();
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

Monomial mono_var(std::size_t i, unsigned power) {
  Monomial m;
  m.e[i] = static_cast<std::uint16_t>(power);
  m.deg = power;
  return m;
}

int degrevlex_compare(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
  switch (kind) {
    case Kind::lex:
      for (std::size_t i = 0; i < nvars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    case Kind::degrevlex:
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (std::size_t i = nvars; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
      return 0;
    case Kind::block: {
      std::size_t k = std::min<std::size_t>(block, nvars);
      int c = degrevlex_compare(a, b, 0, k);
      if (c != 0) return c;
      return degrevlex_compare(a, b, k, nvars);
    }
  }
  return 0;
}

}  // namespace bcalc
