#include "bcalc/poly/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "bcalc/errors.hpp"

namespace bcalc {

namespace {

const MonomialOrder kCanon = MonomialOrder::degrevlex();

void sort_and_merge(std::vector<Term>& terms, std::size_t n) {
  std::sort(terms.begin(), terms.end(), [n](const Term& a, const Term& b) {
    return kCanon.compare(a.mono, b.mono, n) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms = std::move(out);
}

// Merge a + c*b where both are sorted.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, const Rational& c,
                            std::size_t n) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = kCanon.compare(a[i].mono, b[j].mono, n);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].mono, b[j].coef * c});
      ++j;
    } else {
      Rational s = a[i].coef + b[j].coef * c;
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::string rational_to_string(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->size()) fail(ErrorCode::invalid_argument, "variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back({mono_var(i), 1});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  auto i = ring->index_of(name);
  if (!i) fail(ErrorCode::invalid_argument, "unknown variable '" + name + "'");
  return variable(std::move(ring), *i);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  sort_and_merge(terms, p.ring_->size());
  p.terms_ = std::move(terms);
  return p;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.deg; }

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.e[var]);
  return d;
}

unsigned Polynomial::order_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  unsigned d = ~0u;
  for (const auto& t : terms_) d = std::min<unsigned>(d, t.mono.e[var]);
  return d;
}

std::vector<std::size_t> Polynomial::support_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_->size(); ++i)
    if (depends_on(i)) out.push_back(i);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_, "polynomial addition");
  terms_ = merge_add(terms_, o.terms_, 1, ring_->size());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_, "polynomial subtraction");
  terms_ = merge_add(terms_, o.terms_, -1, ring_->size());
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_, "polynomial multiplication");
  if (terms_.empty() || o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  if (o.terms_.size() == 1) {
    *this = mul_monomial(o.terms_[0].mono, o.terms_[0].coef);
    return *this;
  }
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({mono_mul(a.mono, b.mono), a.coef * b.coef});
  sort_and_merge(prod, ring_->size());
  terms_ = std::move(prod);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, m), t.coef * c});
  return r;  // multiplying by a monomial preserves a monomial order
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.e[var] == 0) continue;
    Term d{t.mono, t.coef * t.mono.e[var]};
    d.mono.e[var]--;
    d.mono.deg--;
    out.push_back(std::move(d));
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->size())
    fail(ErrorCode::invalid_argument, "substitution must cover every variable");
  if (images.empty()) return *this;
  RingPtr target = images[0].ring();
  for (const auto& im : images) require_same_ring(target, im.ring(), "substitution targets");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coef);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono.e[i] > 0) term *= power(i, t.mono.e[i]);
    result += term;
  }
  return result;
}

Polynomial Polynomial::substitute_var(std::size_t var, const Polynomial& value) const {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring_->size(); ++i)
    images.push_back(i == var ? value : variable(ring_, i));
  return substitute(images);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->size()) fail(ErrorCode::invalid_argument, "evaluation point size");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned k = 0; k < t.mono.e[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_, "division");
  if (g.is_zero()) fail(ErrorCode::invalid_argument, "division by zero polynomial");
  if (is_zero()) return Polynomial(ring_);
  if (g.is_monomial()) {
    const Term& lt = g.terms_[0];
    Polynomial q(ring_);
    for (const auto& t : terms_) {
      if (!lt.mono.divides(t.mono)) return std::nullopt;
      q.terms_.push_back({mono_div(t.mono, lt.mono), t.coef / lt.coef});
    }
    return q;
  }
  // Division by a single polynomial with degrevlex; {g} is a Groebner basis of (g).
  std::size_t n = ring_->size();
  std::vector<Term> rem = terms_;
  std::vector<Term> quot;
  const Term& lg = g.terms_[0];
  while (!rem.empty()) {
    const Term& lt = rem[0];
    if (!lg.mono.divides(lt.mono)) return std::nullopt;
    Term qt{mono_div(lt.mono, lg.mono), lt.coef / lg.coef};
    std::vector<Term> sub;
    sub.reserve(g.terms_.size());
    for (const auto& t : g.terms_) sub.push_back({mono_mul(t.mono, qt.mono), t.coef * qt.coef});
    rem = merge_add(rem, sub, -1, n);
    quot.push_back(std::move(qt));
  }
  return from_terms(ring_, std::move(quot));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_[0].coef;
  Polynomial r = *this;
  r *= inv;
  return r;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  mpz_class den = 1, num = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  for (const auto& t : terms_) {
    mpz_class v = t.coef.get_num() * (den / t.coef.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (terms_[0].coef < 0) scale = -scale;
  Polynomial r = *this;
  r *= scale;
  return r;
}

Polynomial Polynomial::embed(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->size(); ++i) m.e[var_map[i]] += t.mono.e[i];
    m.deg = t.mono.deg;
    out.push_back({m, t.coef});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    bool wrote = false;
    if (t.mono.is_one() || c != 1) {
      os << rational_to_string(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (wrote) os << "*";
      os << ring_->name(i);
      if (t.mono.e[i] > 1) os << "^" << t.mono.e[i];
      wrote = true;
    }
  }
  return os.str();
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r *= b;
  return r;
}
Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

bool poly_less(const Polynomial& a, const Polynomial& b) {
  std::size_t n = a.ring() ? a.ring()->size() : 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    int c = kCanon.compare(ta[i].mono, tb[i].mono, n);
    if (c != 0) return c < 0;
    if (ta[i].coef != tb[i].coef) return ta[i].coef < tb[i].coef;
  }
  return ta.size() < tb.size();
}

}  // namespace bcalc
