#include "bcalc/regularity/regularity.hpp"

#include "bcalc/errors.hpp"
#include "bcalc/limits.hpp"
#include "bcalc/poly/factor.hpp"

namespace bcalc {

namespace {

Polynomial det(std::vector<std::vector<Polynomial>> m) {
  std::size_t n = m.size();
  if (n == 0) fail(ErrorCode::invalid_argument, "empty determinant");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Polynomial out(m[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    Polynomial t = m[0][j] * det(std::move(sub));
    if (j % 2) out -= t;
    else out += t;
  }
  return out;
}

// All k-subsets of {0..n-1}, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

Ideal product_ideal(const std::vector<Ideal>& parts, const RingPtr& r) {
  Ideal acc = Ideal::unit(r);
  for (const auto& p : parts) {
    if (p.is_unit()) continue;
    acc = acc.is_unit() ? p : intersection(acc, p);
  }
  return acc;
}

// Strata of an equidimensional chart with relations `rel` and boundary elements `elems`.
// `positions` maps element indices back to the caller's numbering.
RegularityReport check_strata(const Ideal& rel, const std::vector<Polynomial>& elems,
                              const std::vector<std::size_t>& positions) {
  const RingPtr& r = rel.ring();
  RegularityReport rep;
  rep.bad_locus = Ideal::unit(r);
  if (rel.is_unit()) return rep;
  if (elems.size() > limits().max_index_set)
    fail(ErrorCode::resource_limit, "boundary has " + std::to_string(elems.size()) + " components, cap is " +
                                        std::to_string(limits().max_index_set));
  const std::size_t N = r->size();
  const int n = dimension(rel);
  std::vector<Polynomial> relgens = rel.groebner();
  std::vector<Ideal> bad;
  for (std::size_t k = 0; k <= elems.size(); ++k) {
    for (const auto& J : subsets(elems.size(), k)) {
      std::vector<Polynomial> gens = relgens;
      for (std::size_t j : J) gens.push_back(elems[j]);
      Ideal K(r, gens);
      if (K.is_unit()) continue;
      int expected = n - static_cast<int>(k);
      int dK = dimension(K);
      Ideal defect = Ideal::unit(r);
      if (expected < 0) {
        defect = K;
      } else {
        std::size_t c = N - static_cast<std::size_t>(expected);
        defect = rank_deficiency_ideal(K, c);
      }
      if (defect.is_unit()) continue;
      bad.push_back(defect);
      if (rep.verdict) {
        rep.verdict = false;
        std::vector<std::size_t> w;
        for (std::size_t j : J) w.push_back(positions[j]);
        rep.witness = w;
        rep.criterion = dK != expected ? "wrong-codimension" : "non-smooth";
      }
    }
  }
  rep.bad_locus = product_ideal(bad, r);
  return rep;
}

void require_pure(const Chart& chart) {
  if (!chart.equidimensional)
    fail(ErrorCode::undecidable_dimension,
         "chart " + chart.id + " relations " + chart.relations.to_string() +
             " are not known to be equidimensional; declare pieces");
}

std::vector<Polynomial> live_elements(const Boundary& b, std::vector<std::size_t>& pos) {
  std::vector<Polynomial> e;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].empty) continue;
    e.push_back(b[i].element);
    pos.push_back(i);
  }
  return e;
}

}  // namespace

Ideal jacobian_minors(const RingPtr& ring, const std::vector<Polynomial>& gens, std::size_t c) {
  if (c == 0) return Ideal::unit(ring);
  std::size_t N = ring->size();
  if (c > N || c > gens.size()) return Ideal::zero(ring);
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < N; ++v) row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }
  auto rows = subsets(gens.size(), c);
  auto cols = subsets(N, c);
  if (rows.size() * cols.size() > 20000) fail(ErrorCode::resource_limit, "too many Jacobian minors");
  std::vector<Polynomial> minors;
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      std::vector<std::vector<Polynomial>> m;
      for (std::size_t i : rs) {
        std::vector<Polynomial> row;
        for (std::size_t j : cs) row.push_back(jac[i][j]);
        m.push_back(std::move(row));
      }
      Polynomial d = det(std::move(m));
      if (!d.is_zero()) minors.push_back(d);
    }
  return Ideal(ring, minors);
}

Ideal rank_deficiency_ideal(const Ideal& K, std::size_t c) {
  Ideal m = jacobian_minors(K.ring(), K.groebner(), c);
  Ideal s = K + m;
  return Ideal(s.ring(), s.groebner());
}

RegularityReport is_regular_scheme(const Chart& chart) {
  if (!chart.pieces.empty()) return semi_regular_locus(chart, Boundary(chart.relations));
  require_pure(chart);
  return check_strata(chart.relations, {}, {});
}

RegularityReport is_snc(const Chart& chart, const Boundary& b) {
  require_same_ring(chart.ring, b.ring(), "is_snc");
  require_pure(chart);
  std::vector<std::size_t> pos;
  auto elems = live_elements(b, pos);
  return check_strata(chart.relations, elems, pos);
}

RegularityReport is_strictly_monomial(const Chart& chart, const Boundary& b) {
  RegularityReport reg = is_regular_scheme(chart);
  if (!reg.verdict) return reg;
  Polynomial s = support(b);
  std::vector<Polynomial> factors;
  if (s.is_zero()) {
    factors.push_back(s);
  } else if (!s.is_constant()) {
    for (const auto& [f, m] : factor_principal(s).factors) factors.push_back(f);
  }
  // Witness positions refer to the support factors.
  return is_snc(chart, Boundary(chart.relations, factors));
}

RegularityReport semi_regular_locus(const Chart& chart, const Boundary& b) {
  require_same_ring(chart.ring, b.ring(), "semi_regular_locus");
  const RingPtr& r = chart.ring;
  const Ideal& rel = chart.relations;
  std::vector<Ideal> pieces = chart.pieces;
  if (pieces.empty()) {
    if (rel.is_zero() || rel.is_unit()) {
      pieces.push_back(rel);
    } else if (auto g = rel.principal_generator()) {
      for (const auto& [f, m] : factor_principal(*g).factors) pieces.push_back(Ideal::principal(f.pow(m)));
    } else {
      for (const auto& c : b.components()) {
        if (c.empty || c.element.is_zero()) continue;
        if (!quotient(rel, c.element).equals(rel))
          fail(ErrorCode::requires_piece_decomposition,
               "component " + c.id + " is a zero divisor on " + rel.to_string() + "; declare pieces");
      }
      require_pure(chart);
      pieces.push_back(rel);
    }
  }
  RegularityReport rep;
  std::vector<Ideal> bad;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const Ideal& P = pieces[k];
    if (!detect_equidimensional(P))
      fail(ErrorCode::undecidable_dimension, "piece " + P.to_string() + " is not known to be equidimensional");
    std::vector<Polynomial> elems;
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i].empty || P.contains(b[i].element)) continue;
      elems.push_back(b[i].element);
      pos.push_back(i);
    }
    RegularityReport pr = check_strata(P, elems, pos);
    if (!pr.verdict) {
      bad.push_back(pr.bad_locus);
      if (rep.verdict) {
        rep.verdict = false;
        rep.witness = pr.witness;
        rep.criterion = pr.criterion;
      }
    }
    for (std::size_t l = k + 1; l < pieces.size(); ++l) {
      Ideal meet = P + pieces[l];
      if (meet.is_unit()) continue;
      bad.push_back(meet);
      if (rep.verdict) {
        rep.verdict = false;
        rep.witness = std::vector<std::size_t>{};
        rep.criterion = "non-smooth";
      }
    }
  }
  rep.bad_locus = product_ideal(bad, r);
  return rep;
}

namespace {

Chart subscheme_chart(const Chart& chart, const Ideal& Z) {
  require_same_ring(chart.ring, Z.ring(), "subscheme chart");
  Ideal rel = Z + chart.relations;
  return Chart::with_relations(Ideal(rel.ring(), rel.groebner()), chart.id);
}

}  // namespace

RegularityReport has_snc_with_boundary(const Chart& chart, const Ideal& Z, const Boundary& b) {
  Chart zc = subscheme_chart(chart, Z);
  return semi_regular_locus(zc, restrict_boundary(b, Z));
}

RegularityReport is_transversal(const Chart& chart, const Ideal& Z, const Boundary& b) {
  Chart zc = subscheme_chart(chart, Z);
  return is_snc(zc, restrict_boundary(b, Z));
}

RegularityReport is_permissible(const Chart& chart, const Center& center, const Boundary& b) {
  RegularityReport rep;
  rep.bad_locus = Ideal::unit(chart.ring);
  std::vector<Ideal> bad;
  for (const auto& comp : center.components()) {
    RegularityReport c = has_snc_with_boundary(chart, comp.ideal, b);
    if (c.verdict) continue;
    bad.push_back(c.bad_locus);
    if (rep.verdict) {
      rep.verdict = false;
      rep.witness = c.witness;
      rep.criterion = c.criterion;
    }
  }
  rep.bad_locus = product_ideal(bad, chart.ring);
  return rep;
}

}  // namespace bcalc
