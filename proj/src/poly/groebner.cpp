#include "bcalc/poly/groebner.hpp"

#include <algorithm>

#include "bcalc/errors.hpp"
#include "bcalc/limits.hpp"

namespace bcalc {

namespace {

using Terms = std::vector<Term>;

struct Ctx {
  MonomialOrder order;
  std::size_t n;
  int cmp(const Monomial& a, const Monomial& b) const { return order.compare(a, b, n); }
};

Terms to_terms(const Polynomial& p, const Ctx& ctx) {
  Terms t = p.terms();
  if (!(ctx.order == MonomialOrder::degrevlex()))
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ctx.cmp(a.mono, b.mono) > 0; });
  return t;
}

// a[from..] - c*m*g, both sorted descending.
Terms sub_multiple(const Terms& a, std::size_t from, const Terms& g, const Monomial& m, const Rational& c,
                   const Ctx& ctx) {
  Terms out;
  out.reserve(a.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < a.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial gm = mono_mul(g[j].mono, m);
    int s = i == a.size() ? -1 : ctx.cmp(a[i].mono, gm);
    if (s > 0) {
      out.push_back(a[i++]);
    } else if (s < 0) {
      out.push_back({gm, -(g[j].coef * c)});
      ++j;
    } else {
      Rational v = a[i].coef - g[j].coef * c;
      if (v != 0) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Terms& t) {
  if (t.empty() || t[0].coef == 1) return;
  Rational inv = 1 / t[0].coef;
  for (auto& x : t) x.coef *= inv;
}

struct Elem {
  Terms p;
  unsigned sugar = 0;
  bool active = true;
};

// Full reduction of f by the active elements (or all listed indices).
Terms reduce(Terms f, const std::vector<Elem>& basis, const Ctx& ctx, bool tail = true,
             std::size_t skip = static_cast<std::size_t>(-1)) {
  Terms rem;
  std::size_t head = 0;
  while (head < f.size()) {
    const Term& lt = f[head];
    const Elem* div = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || !basis[k].active) continue;
      if (basis[k].p[0].mono.divides(lt.mono)) {
        div = &basis[k];
        break;
      }
    }
    if (div == nullptr) {
      if (!tail) {
        rem.insert(rem.end(), f.begin() + head, f.end());
        return rem;
      }
      rem.push_back(lt);
      ++head;
      continue;
    }
    Monomial m = mono_div(lt.mono, div->p[0].mono);
    Rational c = lt.coef / div->p[0].coef;
    f = sub_multiple(f, head, div->p, m, c, ctx);
    head = 0;
  }
  return rem;
}

unsigned degree_of(const Terms& t) {
  unsigned d = 0;
  for (const auto& x : t) d = std::max<unsigned>(d, x.mono.deg);
  return d;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  explicit Buchberger(Ctx ctx) : ctx_(ctx) {}

  // Returns false when the unit ideal was detected.
  bool add(Terms h, unsigned sugar) {
    h = reduce(std::move(h), elems_, ctx_);
    if (h.empty()) return true;
    if (h[0].mono.is_one()) {
      unit_ = true;
      return false;
    }
    make_monic(h);
    if (degree_of(h) > limits().max_degree)
      fail(ErrorCode::resource_limit, "Groebner basis degree exceeds " + std::to_string(limits().max_degree));
    unsigned s = std::max(sugar, degree_of(h));
    elems_.push_back({std::move(h), s, true});
    std::size_t active = 0;
    for (const auto& e : elems_) active += e.active;
    if (active > limits().max_basis)
      fail(ErrorCode::resource_limit, "Groebner basis exceeds " + std::to_string(limits().max_basis) + " elements");
    update(elems_.size() - 1);
    return true;
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar != b.sugar ? a.sugar < b.sugar : ctx_.cmp(a.lcm, b.lcm) < 0) best = k;
      }
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      const Terms& a = elems_[pr.i].p;
      const Terms& b = elems_[pr.j].p;
      Monomial ma = mono_div(pr.lcm, a[0].mono);
      Monomial mb = mono_div(pr.lcm, b[0].mono);
      Terms s;
      s.reserve(a.size() + b.size());
      for (std::size_t k = 1; k < a.size(); ++k) s.push_back({mono_mul(a[k].mono, ma), a[k].coef / a[0].coef});
      Terms sb = sub_multiple(s, 0, Terms(b.begin() + 1, b.end()), mb, 1 / b[0].coef, ctx_);
      if (!add(std::move(sb), pr.sugar)) return;
    }
  }

  std::vector<Polynomial> result(const RingPtr& ring) {
    std::vector<Polynomial> out;
    if (unit_) {
      out.push_back(Polynomial::constant(ring, 1));
      return out;
    }
    std::vector<Elem> basis;
    for (auto& e : elems_)
      if (e.active) basis.push_back(e);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Terms lead{basis[k].p[0]};
      Terms tail(basis[k].p.begin() + 1, basis[k].p.end());
      Terms red = reduce(std::move(tail), basis, ctx_, true, k);
      lead.insert(lead.end(), red.begin(), red.end());
      make_monic(lead);
      basis[k].p = std::move(lead);
    }
    std::sort(basis.begin(), basis.end(),
              [&](const Elem& a, const Elem& b) { return ctx_.cmp(a.p[0].mono, b.p[0].mono) < 0; });
    for (auto& e : basis) out.push_back(Polynomial::from_terms(ring, std::move(e.p)));
    return out;
  }

 private:
  void update(std::size_t h) {
    const Monomial& lh = elems_[h].p[0].mono;
    std::vector<Pair> c;
    for (std::size_t i = 0; i < h; ++i) {
      if (!elems_[i].active) continue;
      c.push_back(make_pair(i, h));
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool coprime = mono_coprime(elems_[p.i].p[0].mono, lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t q = k + 1; q < c.size() && !dominated; ++q)
          if (c[q].lcm.divides(p.lcm)) dominated = true;
        for (const auto& q : d)
          if (!dominated && q.lcm.divides(p.lcm)) dominated = true;
      }
      if (!dominated) d.push_back(p);
    }
    std::vector<Pair> kept;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && mono_lcm(elems_[p.i].p[0].mono, lh) != p.lcm &&
                  mono_lcm(elems_[p.j].p[0].mono, lh) != p.lcm;
      if (!drop) kept.push_back(p);
    }
    for (const auto& p : d)
      if (!mono_coprime(elems_[p.i].p[0].mono, lh)) kept.push_back(p);
    pairs_ = std::move(kept);
    for (std::size_t i = 0; i < h; ++i)
      if (elems_[i].active && lh.divides(elems_[i].p[0].mono)) elems_[i].active = false;
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    const Monomial& a = elems_[i].p[0].mono;
    const Monomial& b = elems_[j].p[0].mono;
    Monomial l = mono_lcm(a, b);
    unsigned s = std::max(elems_[i].sugar + l.deg - a.deg, elems_[j].sugar + l.deg - b.deg);
    return {i, j, l, s};
  }

  Ctx ctx_;
  std::vector<Elem> elems_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace

std::vector<Polynomial> groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order) {
  Ctx ctx{order, ring->size()};
  std::vector<Terms> input;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring(), "groebner_basis generators");
    if (g.is_zero()) continue;
    if (g.is_unit()) return {Polynomial::constant(ring, 1)};
    input.push_back(to_terms(g, ctx));
  }
  std::sort(input.begin(), input.end(), [&](const Terms& a, const Terms& b) {
    if (a[0].mono.deg != b[0].mono.deg) return a[0].mono.deg < b[0].mono.deg;
    return ctx.cmp(a[0].mono, b[0].mono) < 0;
  });
  Buchberger bb(ctx);
  for (auto& t : input) {
    unsigned s = degree_of(t);
    if (!bb.add(std::move(t), s)) break;
  }
  bb.run();
  return bb.result(ring);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  Ctx ctx{order, f.ring()->size()};
  std::vector<Elem> elems;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    require_same_ring(f.ring(), g.ring(), "normal_form");
    elems.push_back({to_terms(g, ctx), 0, true});
  }
  Terms r = reduce(to_terms(f, ctx), elems, ctx);
  return Polynomial::from_terms(f.ring(), std::move(r));
}

std::optional<std::vector<Polynomial>> lift(const Polynomial& f, const std::vector<Polynomial>& gens) {
  // Buchberger in degrevlex tracking each basis element as a combination of gens.
  const RingPtr& ring = f.ring();
  struct Tracked {
    Polynomial p;
    std::vector<Polynomial> rep;
  };
  std::size_t m = gens.size();
  auto zero_rep = [&] { return std::vector<Polynomial>(m, Polynomial(ring)); };
  std::vector<Tracked> basis;

  auto reduce_tracked = [&](Tracked t) {
    Polynomial rem(ring);
    while (!t.p.is_zero()) {
      const Term lt = t.p.leading_term();
      bool done = false;
      for (const auto& g : basis) {
        const Term& lg = g.p.leading_term();
        if (!lg.mono.divides(lt.mono)) continue;
        Monomial q = mono_div(lt.mono, lg.mono);
        Rational c = lt.coef / lg.coef;
        t.p -= g.p.mul_monomial(q, c);
        for (std::size_t k = 0; k < m; ++k)
          if (!g.rep[k].is_zero()) t.rep[k] -= g.rep[k].mul_monomial(q, c);
        done = true;
        break;
      }
      if (!done) {
        rem += Polynomial::monomial(ring, lt.mono, lt.coef);
        t.p -= Polynomial::monomial(ring, lt.mono, lt.coef);
      }
    }
    t.p = rem;
    return t;
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    require_same_ring(ring, gens[i].ring(), "lift");
    if (gens[i].is_zero()) continue;
    Tracked t{gens[i], zero_rep()};
    t.rep[i] = Polynomial::constant(ring, 1);
    t = reduce_tracked(std::move(t));
    if (t.p.is_zero()) continue;
    for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
    basis.push_back(std::move(t));
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.erase(pairs.begin());
    const Term& a = basis[i].p.leading_term();
    const Term& b = basis[j].p.leading_term();
    if (mono_coprime(a.mono, b.mono)) continue;
    Monomial l = mono_lcm(a.mono, b.mono);
    Monomial ma = mono_div(l, a.mono), mb = mono_div(l, b.mono);
    Rational ca = 1 / a.coef, cb = 1 / b.coef;
    Tracked s{basis[i].p.mul_monomial(ma, ca) - basis[j].p.mul_monomial(mb, cb), zero_rep()};
    for (std::size_t k = 0; k < m; ++k)
      s.rep[k] = basis[i].rep[k].mul_monomial(ma, ca) - basis[j].rep[k].mul_monomial(mb, cb);
    s = reduce_tracked(std::move(s));
    if (s.p.is_zero()) continue;
    if (s.p.total_degree() > limits().max_degree || basis.size() >= limits().max_basis)
      fail(ErrorCode::resource_limit, "lift exceeds caps");
    for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
    basis.push_back(std::move(s));
  }
  Tracked t{f, zero_rep()};
  // Track the quotient: f - sum q_k g_k = rem, so cofactors are -(rep of reduction).
  t = reduce_tracked(std::move(t));
  if (!t.p.is_zero()) return std::nullopt;
  std::vector<Polynomial> out;
  for (auto& r : t.rep) out.push_back(-r);
  return out;
}

}  // namespace bcalc
