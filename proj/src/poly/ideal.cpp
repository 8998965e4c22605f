#include "bcalc/poly/ideal.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bcalc/errors.hpp"

namespace bcalc {

namespace {

std::vector<Polynomial> clean_generators(const RingPtr& ring, std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    require_same_ring(ring, g.ring(), "ideal generators");
    if (g.is_zero()) continue;
    bool dup = false;
    for (const auto& h : out)
      if (h == g) dup = true;
    if (!dup) out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i + by;
  return m;
}

// Back from a ring with `by` prepended variables. Only valid on polynomials free of them.
Polynomial unshift(const Polynomial& p, const RingPtr& target, std::size_t by) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < target->size(); ++i) m.e[i] = t.mono.e[i + by];
    m.deg = t.mono.deg;
    out.push_back({m, t.coef});
  }
  return Polynomial::from_terms(target, std::move(out));
}

bool free_of_first(const Polynomial& p, std::size_t k) {
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < k; ++i)
      if (t.mono.e[i] != 0) return false;
  return true;
}

Monomial monomial_content(const Polynomial& f) {
  Monomial m;
  if (f.is_zero()) return m;
  m = f.terms()[0].mono;
  for (const auto& t : f.terms()) m = mono_gcd(m, t.mono);
  return m;
}

// Euclid in Q[x] for polynomials in the single variable `var`.
Polynomial univariate_gcd(Polynomial a, Polynomial b, std::size_t var) {
  const RingPtr& r = a.ring();
  auto lead_deg = [&](const Polynomial& p) { return p.degree_in(var); };
  while (!b.is_zero()) {
    // a mod b
    Polynomial rem = a;
    unsigned db = lead_deg(b);
    const Term& lb = b.terms()[0];
    while (!rem.is_zero() && lead_deg(rem) >= db) {
      const Term& lt = rem.terms()[0];
      Monomial q = mono_div(lt.mono, lb.mono);
      rem -= b.mul_monomial(q, lt.coef / lb.coef);
    }
    a = std::move(b);
    b = std::move(rem);
  }
  (void)r;
  return a.primitive();
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(clean_generators(ring_, std::move(gens))), cache_(std::make_shared<Cache>()) {}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (const auto& [o, b] : cache_->bases)
    if (o == order) return *b;
  auto basis = std::make_shared<const std::vector<Polynomial>>(groebner_basis(ring_, gens_, order));
  cache_->bases.emplace_back(order, basis);
  return *basis;
}

Polynomial Ideal::reduce(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "ideal reduce");
  if (gens_.empty()) return f;
  return normal_form(f, groebner(), MonomialOrder::degrevlex());
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (gens_.empty()) return false;
  for (const auto& g : gens_)
    if (g == f) return true;
  return reduce(f).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "ideal containment");
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "ideal equality");
  return groebner() == other.groebner();
}

bool Ideal::is_unit() const {
  for (const auto& g : gens_)
    if (g.is_unit()) return true;
  if (gens_.empty()) return false;
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_unit();
}

bool Ideal::is_zero() const { return gens_.empty(); }

std::optional<Polynomial> Ideal::principal_generator() const {
  if (gens_.empty()) return Polynomial(ring_);
  if (gens_.size() == 1) return gens_[0];
  const auto& gb = groebner();
  if (gb.size() == 1) return gb[0];
  return std::nullopt;
}

Ideal Ideal::substitute(const std::vector<Polynomial>& images) const {
  if (images.empty()) return *this;
  std::vector<Polynomial> out;
  for (const auto& g : gens_) out.push_back(g.substitute(images));
  return Ideal(images[0].ring(), std::move(out));
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << ">";
  return os.str();
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal sum");
  std::vector<Polynomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g));
}

Ideal operator+(const Ideal& a, const Polynomial& f) { return a + Ideal::principal(f); }

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal product");
  std::vector<Polynomial> g;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(x * y);
  return Ideal(a.ring(), std::move(g));
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars) {
  const RingPtr& r = I.ring();
  std::size_t n = r->size();
  std::vector<bool> elim(n, false);
  for (auto v : vars) elim[v] = true;
  // Eliminated variables first, block order.
  std::vector<std::size_t> perm(n);
  std::vector<std::string> names;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (elim[i]) {
      perm[i] = names.size();
      names.push_back(r->name(i));
      ++k;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (!elim[i]) {
      perm[i] = names.size();
      names.push_back(r->name(i));
    }
  RingPtr er = make_ring(names);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.embed(er, perm));
  auto gb = groebner_basis(er, gens, MonomialOrder::elimination(static_cast<unsigned>(k)));
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
  std::vector<Polynomial> out;
  for (const auto& g : gb)
    if (free_of_first(g, k)) out.push_back(g.embed(r, inv));
  return Ideal(r, std::move(out));
}

Ideal intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal intersection");
  const RingPtr& r = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(r);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  RingPtr er = prepend_fresh(r, 1);
  auto map = shift_map(r->size(), 1);
  Polynomial t = Polynomial::variable(er, 0);
  Polynomial one_minus_t = Polynomial::constant(er, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.embed(er, map));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.embed(er, map));
  auto gb = groebner_basis(er, gens, MonomialOrder::elimination(1));
  std::vector<Polynomial> out;
  for (const auto& g : gb)
    if (free_of_first(g, 1)) out.push_back(unshift(g, r, 1));
  return Ideal(r, std::move(out));
}

Ideal quotient(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring(), "ideal quotient");
  const RingPtr& r = I.ring();
  if (f.is_zero()) return Ideal::unit(r);
  if (f.is_unit() || I.is_zero()) return I;
  if (I.contains(f)) return Ideal::unit(r);
  Ideal meet = intersection(I, Ideal::principal(f));
  std::vector<Polynomial> out;
  for (const auto& g : meet.generators()) {
    auto q = g.divide_exact(f);
    if (!q) fail(ErrorCode::verification_failure, "inexact division in ideal quotient");
    out.push_back(*q);
  }
  return Ideal(r, std::move(out));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal quotient");
  if (J.is_zero()) return Ideal::unit(I.ring());
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal q = quotient(I, g);
    acc = acc ? intersection(*acc, q) : q;
  }
  return *acc;
}

Ideal saturation(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring(), "saturation");
  const RingPtr& r = I.ring();
  if (f.is_zero()) fail(ErrorCode::invalid_argument, "saturation by zero");
  if (f.is_unit() || I.is_zero()) return I;
  if (I.is_unit()) return I;
  if (auto g = I.principal_generator()) {
    // (g) : f^inf removes every factor g shares with f.
    Polynomial h = *g;
    for (;;) {
      Polynomial d = poly_gcd(h, f);
      if (d.is_constant()) break;
      h = *h.divide_exact(d);
    }
    return Ideal::principal(h.primitive());
  }
  Ideal cur = I;
  for (;;) {
    Ideal next = quotient(cur, f);
    if (next.equals(cur)) return Ideal(r, cur.groebner());
    cur = Ideal(r, next.groebner());
  }
}

Ideal saturation_rabinowitsch(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring(), "saturation");
  const RingPtr& r = I.ring();
  RingPtr er = prepend_fresh(r, 1);
  auto map = shift_map(r->size(), 1);
  Polynomial t = Polynomial::variable(er, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.embed(er, map));
  gens.push_back(Polynomial::constant(er, 1) - t * f.embed(er, map));
  auto gb = groebner_basis(er, gens, MonomialOrder::elimination(1));
  std::vector<Polynomial> out;
  for (const auto& g : gb)
    if (free_of_first(g, 1)) out.push_back(unshift(g, r, 1));
  return Ideal(r, std::move(out));
}

int dimension(const Ideal& I) {
  std::size_t n = I.ring()->size();
  if (I.is_zero()) return static_cast<int>(n);
  if (I.is_unit()) return -1;
  std::vector<std::uint32_t> lead_masks;
  for (const auto& g : I.groebner()) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.terms()[0].mono.e[i] > 0) m |= 1u << i;
    lead_masks.push_back(m);
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int pc = std::popcount(s);
    if (pc <= best) continue;
    bool independent = true;
    for (auto m : lead_masks)
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = pc;
  }
  return best;
}

bool radical_contains(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring(), "radical membership");
  if (I.contains(f)) return true;
  if (I.is_zero()) return f.is_zero();
  const RingPtr& r = I.ring();
  RingPtr er = prepend_fresh(r, 1);
  auto map = shift_map(r->size(), 1);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.embed(er, map));
  gens.push_back(Polynomial::constant(er, 1) - Polynomial::variable(er, 0) * f.embed(er, map));
  auto gb = groebner_basis(er, gens, MonomialOrder::degrevlex());
  return gb.size() == 1 && gb[0].is_unit();
}

bool vanishes_on(const Ideal& J, const Ideal& I) {
  for (const auto& g : J.generators())
    if (!radical_contains(I, g)) return false;
  return true;
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "gcd");
  const RingPtr& r = f.ring();
  if (f.is_zero()) return g.primitive();
  if (g.is_zero()) return f.primitive();
  Monomial cf = monomial_content(f), cg = monomial_content(g);
  Polynomial mono = Polynomial::monomial(r, mono_gcd(cf, cg));
  Polynomial a = *f.divide_exact(Polynomial::monomial(r, cf));
  Polynomial b = *g.divide_exact(Polynomial::monomial(r, cg));
  if (a.is_constant() || b.is_constant()) return mono;
  if (a == b) return mono * a.primitive();
  if (auto q = a.divide_exact(b)) return mono * b.primitive();
  if (auto q = b.divide_exact(a)) return mono * a.primitive();
  auto va = a.support_variables(), vb = b.support_variables();
  if (va.size() == 1 && vb == va) return mono * univariate_gcd(a, b, va[0]);
  // Disjoint variable sets share no factor.
  bool overlap = false;
  for (auto x : va)
    if (std::find(vb.begin(), vb.end(), x) != vb.end()) overlap = true;
  if (!overlap) return mono;
  Ideal meet = intersection(Ideal::principal(a), Ideal::principal(b));
  auto l = meet.principal_generator();
  if (!l || l->is_zero()) fail(ErrorCode::verification_failure, "intersection of principal ideals not principal");
  auto d = (a * b).divide_exact(*l);
  if (!d) fail(ErrorCode::verification_failure, "lcm does not divide product");
  return mono * d->primitive();
}

Polynomial poly_lcm(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  Polynomial d = poly_gcd(f, g);
  return (*(f * g).divide_exact(d)).primitive();
}

}  // namespace bcalc
