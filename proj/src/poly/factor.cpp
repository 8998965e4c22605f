#include "bcalc/poly/factor.hpp"

#include <algorithm>

#include "bcalc/errors.hpp"
#include "bcalc/limits.hpp"
#include "bcalc/poly/ideal.hpp"
#include "zfactor.hpp"

namespace bcalc {

namespace {

using detail::ZPoly;

Polynomial strip_monomial(const Polynomial& f, std::vector<std::pair<Polynomial, unsigned>>* out) {
  const RingPtr& r = f.ring();
  Monomial m;
  for (std::size_t i = 0; i < r->size(); ++i) {
    unsigned k = f.order_in(i);
    if (k == 0) continue;
    m.e[i] = static_cast<std::uint16_t>(k);
    if (out) out->emplace_back(Polynomial::variable(r, i), k);
  }
  m.recompute_degree();
  return *f.divide_exact(Polynomial::monomial(r, m));
}

// Radical generator of a polynomial free of monomial content.
Polynomial radical_of(const Polynomial& g) {
  Polynomial d = g;
  for (auto v : g.support_variables()) {
    d = poly_gcd(d, g.derivative(v));
    if (d.is_constant()) break;
  }
  if (d.is_constant()) return g.primitive();
  return g.divide_exact(d)->primitive();
}

// Kronecker image of f: variable vars[i] becomes t^(D[0]*...*D[i-1]).
ZPoly kronecker(const Polynomial& f, const std::vector<std::size_t>& vars, const std::vector<unsigned>& D) {
  Polynomial p = f.primitive();
  std::vector<std::pair<std::size_t, mpz_class>> coeffs;
  std::size_t maxe = 0;
  for (const auto& t : p.terms()) {
    std::size_t e = 0, w = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      e += t.mono.e[vars[i]] * w;
      w *= D[i];
    }
    maxe = std::max(maxe, e);
    coeffs.emplace_back(e, t.coef.get_num());
  }
  ZPoly z(maxe + 1, 0);
  for (auto& [e, c] : coeffs) z[e] += c;
  while (!z.empty() && z.back() == 0) z.pop_back();
  return z;
}

std::optional<Polynomial> inverse_kronecker(const ZPoly& z, const RingPtr& ring, const std::vector<std::size_t>& vars,
                                            const std::vector<unsigned>& D) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < z.size(); ++e) {
    if (z[e] == 0) continue;
    Monomial m;
    std::size_t rest = e;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      m.e[vars[i]] = static_cast<std::uint16_t>(rest % D[i]);
      rest /= D[i];
    }
    if (rest != 0) return std::nullopt;
    m.recompute_degree();
    terms.push_back({m, Rational(z[e])});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

ZPoly to_zpoly(const Polynomial& f, std::size_t var) {
  Polynomial p = f.primitive();
  ZPoly z(p.degree_in(var) + 1, 0);
  for (const auto& t : p.terms()) z[t.mono.e[var]] = t.coef.get_num();
  return z;
}

Polynomial from_zpoly(const ZPoly& z, const RingPtr& ring, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < z.size(); ++e)
    if (z[e] != 0) terms.push_back({mono_var(var, static_cast<unsigned>(e)), Rational(z[e])});
  return Polynomial::from_terms(ring, std::move(terms));
}

// Full univariate factorization (with repetition) of an integer polynomial.
std::vector<ZPoly> univariate_factors_with_repeats(const ZPoly& z) {
  RingPtr r1 = make_ring({"_k"});
  Polynomial p = from_zpoly(z, r1, 0);
  std::vector<ZPoly> out;
  unsigned k = p.order_in(0);
  for (unsigned i = 0; i < k; ++i) out.push_back(ZPoly{0, 1});
  Polynomial q = strip_monomial(p, nullptr);
  if (q.is_constant()) return out;
  for (auto& [part, mult] : squarefree_decomposition(q)) {
    for (auto& irr : detail::factor_squarefree_z(to_zpoly(part, 0)))
      for (unsigned m = 0; m < mult; ++m) out.push_back(irr);
  }
  return out;
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

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Irreducible factors of a squarefree polynomial without monomial content.
std::vector<Polynomial> split_squarefree(const Polynomial& s) {
  const RingPtr& ring = s.ring();
  auto vars = s.support_variables();
  if (vars.empty()) return {};
  if (vars.size() == 1) {
    std::vector<Polynomial> out;
    for (auto& z : detail::factor_squarefree_z(to_zpoly(s, vars[0]))) out.push_back(from_zpoly(z, ring, vars[0]));
    return out;
  }
  // Mixed radix: a factor's degree in each variable is bounded by the input's.
  std::vector<unsigned> D;
  double image_degree = 0, w = 1;
  for (auto v : vars) {
    D.push_back(s.degree_in(v) + 1);
    image_degree += s.degree_in(v) * w;
    w *= D.back();
  }
  if (image_degree > limits().max_factor_degree)
    fail(ErrorCode::resource_limit, "factorization Kronecker degree exceeds " +
                                        std::to_string(limits().max_factor_degree));
  auto pieces = univariate_factors_with_repeats(kronecker(s, vars, D));
  std::vector<Polynomial> out;
  Polynomial cur = s;
  std::size_t k = 1;
  while (!cur.is_constant() && 2 * k <= pieces.size()) {
    bool found = false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      ZPoly prod{1};
      for (auto i : idx) prod = zmul(prod, pieces[i]);
      auto cand = inverse_kronecker(prod, ring, vars, D);
      if (!cand || cand->is_constant()) continue;
      if (auto q = cur.divide_exact(*cand)) {
        out.push_back(cand->primitive());
        cur = *q;
        std::vector<ZPoly> rest;
        for (std::size_t i = 0, j = 0; i < pieces.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          rest.push_back(pieces[i]);
        }
        pieces = std::move(rest);
        found = true;
        break;
      }
    } while (next_combination(idx, pieces.size()));
    if (!found) ++k;
  }
  if (!cur.is_constant()) out.push_back(cur.primitive());
  return out;
}

}  // namespace

Polynomial Factorization::expand(const RingPtr& ring) const {
  Polynomial p = Polynomial::constant(ring, unit);
  for (const auto& [f, m] : factors) p *= f.pow(m);
  return p;
}

std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& f) {
  if (f.is_zero()) fail(ErrorCode::invalid_argument, "squarefree decomposition of zero");
  std::vector<std::pair<Polynomial, unsigned>> out;
  std::vector<std::pair<Polynomial, unsigned>> mono;
  Polynomial g = strip_monomial(f, &mono);
  // r_k = rad(f / (r_1 ... r_{k-1})) collects factors of multiplicity >= k.
  std::vector<Polynomial> rads;
  Polynomial cur = g;
  while (!cur.is_constant()) {
    Polynomial r = radical_of(cur);
    rads.push_back(r);
    cur = *cur.divide_exact(r);
  }
  for (std::size_t k = 0; k < rads.size(); ++k) {
    Polynomial part = k + 1 < rads.size() ? *rads[k].divide_exact(rads[k + 1]) : rads[k];
    if (!part.is_constant()) out.emplace_back(part.primitive(), static_cast<unsigned>(k + 1));
  }
  for (auto& [v, k] : mono) {
    bool merged = false;
    for (auto& [p, m] : out)
      if (m == k) {
        p = (p * v).primitive();
        merged = true;
      }
    if (!merged) out.emplace_back(v, k);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  if (f.is_constant()) return Polynomial::constant(f.ring(), 1);
  Polynomial p = Polynomial::constant(f.ring(), 1);
  for (auto& [s, m] : squarefree_decomposition(f)) p *= s;
  return p.primitive();
}

Factorization factor_principal(const Polynomial& f) {
  if (f.is_zero()) fail(ErrorCode::invalid_argument, "factorization of zero");
  const RingPtr& ring = f.ring();
  Factorization out;
  std::vector<std::pair<Polynomial, unsigned>> mono;
  Polynomial g = strip_monomial(f, &mono);
  for (auto& m : mono) out.factors.push_back(m);
  if (!g.is_constant()) {
    for (auto& [part, mult] : squarefree_decomposition(g))
      for (auto& irr : split_squarefree(part)) out.factors.emplace_back(irr, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.total_degree() != b.first.total_degree()) return a.first.total_degree() < b.first.total_degree();
    return a.first.to_string() < b.first.to_string();
  });
  Polynomial e = out.expand(ring);
  out.unit = f.leading_coefficient() / e.leading_coefficient();
  if (out.expand(ring) != f) fail(ErrorCode::verification_failure, "factorization does not expand to input");
  return out;
}

}  // namespace bcalc
