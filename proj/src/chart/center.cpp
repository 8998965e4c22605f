#include "bcalc/chart/center.hpp"

#include <algorithm>
#include <numeric>

#include "bcalc/errors.hpp"
#include "bcalc/poly/factor.hpp"

namespace bcalc {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// Inverse of a square rational matrix, nullopt when singular.
std::optional<std::vector<std::vector<Rational>>> invert(std::vector<std::vector<Rational>> a) {
  std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= d;
      inv[col][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace

std::optional<AffineForm> affine_form(const Polynomial& p) {
  AffineForm f{std::vector<Rational>(p.ring()->size(), 0), 0};
  for (const auto& t : p.terms()) {
    if (t.mono.deg > 1) return std::nullopt;
    if (t.mono.deg == 0) {
      f.constant = t.coef;
      continue;
    }
    for (std::size_t i = 0; i < p.ring()->size(); ++i)
      if (t.mono.e[i] == 1) f.linear[i] = t.coef;
  }
  return f;
}

bool is_linear_ideal(const Ideal& I) {
  for (const auto& g : I.groebner())
    if (g.total_degree() > 1) return false;
  return true;
}

bool is_monomial_ideal(const Ideal& I) {
  for (const auto& g : I.groebner())
    if (!g.is_monomial()) return false;
  return true;
}

std::optional<MonomialCenterShape> monomial_center_shape(const Ideal& I) {
  if (I.is_zero() || !is_monomial_ideal(I)) return std::nullopt;
  const RingPtr& r = I.ring();
  const auto& gb = I.groebner();
  Monomial m = gb[0].terms()[0].mono;
  for (const auto& g : gb) m = mono_gcd(m, g.terms()[0].mono);
  std::vector<Monomial> rest;
  std::vector<bool> used(r->size(), false);
  unsigned k = 0;
  for (const auto& g : gb) {
    Monomial q = mono_div(g.terms()[0].mono, m);
    if (k == 0) k = q.deg;
    if (q.deg != k) return std::nullopt;
    for (std::size_t i = 0; i < r->size(); ++i)
      if (q.e[i]) used[i] = true;
    rest.push_back(q);
  }
  MonomialCenterShape shape{Polynomial::monomial(r, m), {}, k};
  for (std::size_t i = 0; i < r->size(); ++i)
    if (used[i]) shape.vars.push_back(i);
  if (k == 0) return shape;  // principal monomial
  // All monomials of degree k in the used variables must appear.
  std::size_t s = shape.vars.size();
  // binomial(s + k - 1, k)
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), s + k - 1, k);
  if (count != static_cast<unsigned long>(rest.size())) return std::nullopt;
  return shape;
}

Frame auto_frame(const Ideal& I, std::vector<std::size_t>& vars) {
  const RingPtr& r = I.ring();
  Frame frame;
  for (std::size_t i = 0; i < r->size(); ++i) frame.coords.push_back(Polynomial::variable(r, i));
  vars.clear();
  for (const auto& g : I.groebner()) {
    if (g.total_degree() != 1) fail(ErrorCode::center_not_coordinate, "generator " + g.to_string() + " is not linear");
    std::size_t pivot = 0;
    while (g.terms()[0].mono.e[pivot] == 0) ++pivot;
    frame.coords[pivot] = g;
    vars.push_back(pivot);
  }
  std::sort(vars.begin(), vars.end());
  return frame;
}

std::vector<std::size_t> frame_coordinates(const Frame& frame, const Ideal& I) {
  const RingPtr& r = I.ring();
  std::size_t n = r->size();
  if (frame.coords.size() != n) fail(ErrorCode::center_not_coordinate, "frame must list one form per variable");
  std::vector<std::vector<Rational>> a;
  for (const auto& c : frame.coords) {
    require_same_ring(r, c.ring(), "frame");
    auto f = affine_form(c);
    if (!f) fail(ErrorCode::center_not_coordinate, "frame coordinate " + c.to_string() + " is not affine");
    a.push_back(f->linear);
  }
  if (!invert(a)) fail(ErrorCode::center_not_coordinate, "frame is not invertible");
  std::vector<std::size_t> vars;
  std::vector<Polynomial> chosen;
  for (std::size_t k = 0; k < n; ++k)
    if (I.contains(frame.coords[k])) {
      vars.push_back(k);
      chosen.push_back(frame.coords[k]);
    }
  if (!Ideal(r, chosen).equals(I))
    fail(ErrorCode::center_not_coordinate, "center " + I.to_string() + " is not generated by frame coordinates");
  return vars;
}

// Exposed for chart.cpp.
std::optional<std::vector<std::vector<Rational>>> invert_matrix(const std::vector<std::vector<Rational>>& a) {
  return invert(a);
}

Center::Center(Ideal ideal) : ideal_(std::move(ideal)) {
  if (ideal_.is_zero()) fail(ErrorCode::invalid_argument, "the zero ideal is not a blow-up center");
  if (ideal_.is_unit()) return;
  if (auto g = ideal_.principal_generator(); g && !is_linear_ideal(ideal_) && !g->is_monomial()) {
    // Group irreducible factors whose zero sets meet.
    Factorization fac = factor_principal(*g);
    std::size_t n = fac.factors.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Ideal meet(ideal_.ring(), {fac.factors[i].first, fac.factors[j].first});
        if (!meet.is_unit()) parent[find_root(parent, i)] = find_root(parent, j);
      }
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = find_root(parent, i);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    for (auto r : roots) {
      Polynomial prod = Polynomial::constant(ideal_.ring(), 1);
      for (std::size_t i = 0; i < n; ++i)
        if (find_root(parent, i) == r) prod *= fac.factors[i].first.pow(fac.factors[i].second);
      components_.push_back({Ideal::principal(prod), std::nullopt});
    }
    return;
  }
  if (is_linear_ideal(ideal_) || is_monomial_ideal(ideal_) || ideal_.principal_generator()) {
    components_.push_back({ideal_, std::nullopt});
    return;
  }
  fail(ErrorCode::invalid_argument,
       "center " + ideal_.to_string() + " needs a declared component list (neither principal, linear nor monomial)");
}

Center::Center(Ideal ideal, std::vector<CenterComponent> components)
    : ideal_(std::move(ideal)), components_(std::move(components)), declared_(true) {
  if (ideal_.is_zero()) fail(ErrorCode::invalid_argument, "the zero ideal is not a blow-up center");
  if (ideal_.is_unit()) {
    components_.clear();
    return;
  }
  if (components_.empty()) fail(ErrorCode::invalid_argument, "proper center needs at least one component");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    require_same_ring(ideal_.ring(), components_[i].ideal.ring(), "center component");
    if (components_[i].ideal.is_unit() || components_[i].ideal.is_zero())
      fail(ErrorCode::invalid_argument, "center component must be a proper nonzero ideal");
    for (std::size_t j = i + 1; j < components_.size(); ++j)
      if (!(components_[i].ideal + components_[j].ideal).is_unit())
        fail(ErrorCode::invalid_argument, "center components must be pairwise disjoint");
  }
  Ideal prod = components_[0].ideal;
  for (std::size_t i = 1; i < components_.size(); ++i) prod = ideal_product(prod, components_[i].ideal);
  if (!vanishes_on(prod, ideal_) || !vanishes_on(ideal_, prod))
    fail(ErrorCode::invalid_argument, "center components do not cover the center");
  for (auto& c : components_)
    if (c.frame) frame_coordinates(*c.frame, c.ideal);
}

Center Center::with_frame(Ideal ideal, Frame frame) {
  Ideal copy = ideal;
  return Center(std::move(ideal), {CenterComponent{std::move(copy), std::move(frame)}});
}

}  // namespace bcalc
