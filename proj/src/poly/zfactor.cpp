#include "zfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>

#include "bcalc/errors.hpp"

namespace bcalc::detail {

namespace {

using u64 = std::uint64_t;
using Fp = std::vector<u64>;  // mod-p polynomial, low to high

// ---- mod p arithmetic ----

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 powmod_u(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_u(u64 a, u64 p) { return powmod_u(a, p - 2, p); }

Fp fp_sub(const Fp& a, const Fp& b, u64 p) {
  Fp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Fp fp_mul(const Fp& a, const Fp& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  // p < 2^16, so raw sums of products fit in 64 bits.
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c %= p;
  trim(r);
  return r;
}

// a = q*b + r
void fp_divrem(const Fp& a, const Fp& b, u64 p, Fp& q, Fp& r) {
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, 0);
  u64 il = inv_u(b.back(), p);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    u64 c = r[k] * il % p;
    std::size_t sh = k - (b.size() - 1);
    q[sh] = c;
    if (c)
      for (std::size_t j = 0; j < b.size(); ++j) r[sh + j] = (r[sh + j] + p - c * b[j] % p) % p;
    if (k == b.size() - 1) break;
  }
  trim(r);
  trim(q);
}

Fp fp_rem(const Fp& a, const Fp& b, u64 p) {
  Fp q, r;
  fp_divrem(a, b, p, q, r);
  return r;
}

Fp fp_monic(Fp a, u64 p) {
  if (a.empty()) return a;
  u64 il = inv_u(a.back(), p);
  for (auto& c : a) c = c * il % p;
  return a;
}

Fp fp_gcd(Fp a, Fp b, u64 p) {
  while (!b.empty()) {
    Fp r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
void fp_ext_gcd(const Fp& a, const Fp& b, u64 p, Fp& s, Fp& t) {
  Fp r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    Fp q, r;
    fp_divrem(r0, r1, p, q, r);
    Fp s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    Fp t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant
  u64 il = inv_u(r0[0], p);
  for (auto& c : s0) c = c * il % p;
  for (auto& c : t0) c = c * il % p;
  s = s0;
  t = t0;
}

Fp fp_powmod(Fp base, const mpz_class& e, const Fp& mod, u64 p) {
  Fp r{1};
  base = fp_rem(base, mod, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = fp_rem(fp_mul(r, r, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_rem(fp_mul(r, base, p), mod, p);
  }
  return r;
}

Fp fp_derivative(const Fp& a, u64 p) {
  Fp d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
  trim(d);
  return d;
}

void equal_degree_split(const Fp& g, std::size_t d, u64 p, std::mt19937_64& rng, std::vector<Fp>& out) {
  std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
  mpz_class e = (pd - 1) / 2;
  for (;;) {
    Fp a(n, 0);
    for (auto& c : a) c = rng() % p;
    trim(a);
    if (a.size() < 2) continue;
    Fp b = fp_powmod(a, e, g, p);
    b = fp_sub(b, Fp{1}, p);
    Fp c = fp_gcd(g, b, p);
    if (c.size() > 1 && c.size() < g.size()) {
      Fp q, r;
      fp_divrem(g, c, p, q, r);
      equal_degree_split(c, d, p, rng, out);
      equal_degree_split(fp_monic(q, p), d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree f over F_p.
std::vector<Fp> factor_mod_p(Fp f, u64 p) {
  std::vector<Fp> out;
  std::mt19937_64 rng(0x5eed + p);
  Fp x{0, 1};
  Fp h = x;
  for (std::size_t d = 1; f.size() > 1; ++d) {
    if (2 * d > f.size() - 1) {
      out.push_back(f);
      break;
    }
    h = fp_powmod(h, mpz_class(static_cast<unsigned long>(p)), f, p);
    Fp g = fp_gcd(f, fp_sub(h, x, p), p);
    if (g.size() > 1) {
      equal_degree_split(g, d, p, rng, out);
      Fp q, r;
      fp_divrem(f, g, p, q, r);
      f = fp_monic(q, p);
      h = fp_rem(h, f, p);
    }
  }
  return out;
}

// ---- arithmetic modulo M over Z ----

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class zmod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly zreduce(ZPoly a, const mpz_class& m) {
  for (auto& c : a) c = zmod(c, m);
  ztrim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

// Division by monic b modulo m.
void zdivrem_monic(const ZPoly& a, const ZPoly& b, const mpz_class& m, ZPoly& q, ZPoly& r) {
  r = zreduce(a, m);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, 0);
  for (std::size_t k = r.size(); k-- >= b.size();) {
    mpz_class c = r[k];
    std::size_t sh = k - (b.size() - 1);
    q[sh] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[sh + j] = zmod(r[sh + j] - c * b[j], m);
    if (k == b.size() - 1) break;
  }
  ztrim(r);
  ztrim(q);
}

ZPoly to_z(const Fp& a) {
  ZPoly r;
  for (auto c : a) r.push_back(mpz_class(static_cast<unsigned long>(c)));
  return r;
}

Fp to_fp(const ZPoly& a, u64 p) {
  Fp r;
  mpz_class pp(static_cast<unsigned long>(p));
  for (const auto& c : a) r.push_back(zmod(c, pp).get_ui());
  trim(r);
  return r;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::verification_failure, "leading coefficient not invertible in Hensel lifting");
  return r;
}

// One quadratic Hensel step from modulus m to m2 (m | m2 | m^2).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m2) {
  ZPoly e = zreduce(zsub(f, zmul(g, h)), m2);
  ZPoly q, r;
  zdivrem_monic(zmul(s, e), h, m2, q, r);
  ZPoly g2 = zreduce(zadd(g, zadd(zmul(t, e), zmul(q, g))), m2);
  ZPoly h2 = zreduce(zadd(h, r), m2);
  ZPoly b = zreduce(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{1}), m2);
  ZPoly c, d;
  zdivrem_monic(zmul(s, b), h2, m2, c, d);
  s = zreduce(zsub(s, d), m2);
  t = zreduce(zsub(t, zadd(zmul(t, b), zmul(c, g2))), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Monic lifts modulo M = p^k of the mod-p factorization f = lc * prod(L).
void lift_tree(const ZPoly& f, const std::vector<Fp>& L, u64 p, const mpz_class& M, std::vector<ZPoly>& out) {
  if (L.size() == 1) {
    mpz_class il = inverse_mod(f.back(), M);
    ZPoly g = f;
    for (auto& c : g) c = zmod(c * il, M);
    out.push_back(g);
    return;
  }
  std::size_t half = L.size() / 2;
  std::vector<Fp> L1(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<Fp> L2(L.begin() + static_cast<std::ptrdiff_t>(half), L.end());
  Fp g0{to_fp(ZPoly{f.back()}, p)};
  for (const auto& x : L1) g0 = fp_mul(g0, x, p);
  Fp h0{1};
  for (const auto& x : L2) h0 = fp_mul(h0, x, p);
  Fp s0, t0;
  fp_ext_gcd(g0, h0, p, s0, t0);
  ZPoly g = to_z(g0), h = to_z(h0), s = to_z(s0), t = to_z(t0);
  mpz_class m(static_cast<unsigned long>(p));
  ZPoly fr = zreduce(f, M);
  while (m < M) {
    mpz_class m2 = m * m;
    if (m2 > M) m2 = M;
    hensel_step(zreduce(fr, m2), g, h, s, t, m2);
    m = m2;
  }
  lift_tree(g, L1, p, M, out);
  lift_tree(h, L2, p, M, out);
}

std::optional<ZPoly> zdiv_exact(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a, q(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (r[k] == 0) {
      if (k == b.size() - 1) break;
      continue;
    }
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class c = r[k] / b.back();
    std::size_t sh = k - (b.size() - 1);
    q[sh] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[sh + j] -= c * b[j];
    if (k == b.size() - 1) break;
  }
  for (const auto& c : r)
    if (c != 0) return std::nullopt;
  ztrim(q);
  return q;
}

ZPoly zprimitive(ZPoly a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

mpz_class symmetric(const mpz_class& c, const mpz_class& M) {
  mpz_class r = zmod(c, M);
  if (2 * r > M) r -= M;
  return r;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::vector<ZPoly> factor_squarefree_z(const ZPoly& f_in) {
  ZPoly f = f_in;
  ztrim(f);
  std::size_t deg = f.size() - 1;
  if (deg <= 1) return {zprimitive(f)};

  // Pick the prime with the fewest modular factors among a few candidates.
  std::vector<Fp> best;
  u64 best_p = 0;
  int tried = 0;
  for (u64 p = 10007; tried < 3 && p < 65536; p += 2) {
    if (!is_prime(p)) continue;
    mpz_class pp(static_cast<unsigned long>(p));
    if (zmod(f.back(), pp) == 0) continue;
    Fp fp = to_fp(f, p);
    Fp g = fp_gcd(fp, fp_derivative(fp, p), p);
    if (g.size() > 1) continue;
    ++tried;
    auto fac = factor_mod_p(fp_monic(fp, p), p);
    if (best_p == 0 || fac.size() < best.size()) {
      best = std::move(fac);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) fail(ErrorCode::resource_limit, "no suitable prime for univariate factorization");
  if (best.size() == 1) return {zprimitive(f)};

  // Coefficient bound for factors times the leading coefficient.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 2, deg);
  mpz_class lc = abs(f.back());
  bound *= norm * lc;
  mpz_class M = static_cast<unsigned long>(best_p);
  while (M <= 2 * bound) M *= static_cast<unsigned long>(best_p);

  std::vector<ZPoly> lifted;
  lift_tree(f, best, best_p, M, lifted);

  std::vector<ZPoly> result;
  ZPoly cur = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly g{cur.back()};
      for (auto i : idx) g = zreduce(zmul(g, lifted[i]), M);
      for (auto& c : g) c = symmetric(c, M);
      ztrim(g);
      g = zprimitive(g);
      if (g.size() < 2) continue;
      if (auto q = zdiv_exact(cur, g)) {
        result.push_back(g);
        cur = *q;
        std::vector<ZPoly> rest;
        for (std::size_t i = 0, k = 0; i < lifted.size(); ++i) {
          if (k < idx.size() && idx[k] == i) {
            ++k;
            continue;
          }
          rest.push_back(lifted[i]);
        }
        lifted = std::move(rest);
        found = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (cur.size() > 1) result.push_back(zprimitive(cur));
  return result;
}

}  // namespace bcalc::detail
