#include <algorithm>
#include "bcalc/errors.hpp"
#include "bcalc/poly/factor.hpp"
#include "common.hpp"

namespace bcalc {

using detail::make_flag;

namespace {

struct LeafState {
  Polynomial strict;  // generator of the strict transform of B_i
  Boundary complete;
};

LeafState leaf_state(const Boundary& b, std::size_t i, const std::string& leaf,
                     const std::map<std::string, Ideal>& strict, const std::map<std::string, TransformedBoundary>& tr) {
  auto g = strict.at(leaf).principal_generator();
  if (!g) fail(ErrorCode::verification_failure, "strict transform of " + b[i].id + " is not principal at " + leaf);
  return {*g, tr.at(leaf).complete()};
}

bool separated(const Chart& c, const LeafState& st) {
  if (st.strict.is_constant()) return true;
  Ideal bad = semi_regular_locus(c, st.complete).bad_locus;
  return (bad + st.strict).is_unit();
}

std::vector<Polynomial> factors_of(const Polynomial& f) {
  std::vector<Polynomial> out;
  if (f.is_zero() || f.is_constant()) return out;
  for (const auto& [q, m] : factor_principal(f).factors) out.push_back(q);
  // Order by monomial support so rescaled coordinates give the same component order.
  auto key = [](const Polynomial& p) {
    std::vector<std::vector<unsigned>> k;
    for (const auto& t : p.terms()) k.push_back({t.mono.e.begin(), t.mono.e.end()});
    return k;
  };
  std::stable_sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) { return key(a) < key(b); });
  return out;
}

}  // namespace

ResolutionReport separate_boundary(const Chart& chart, const Boundary& b, const std::optional<Ideal>& bad_locus,
                                   const DesingularizationOracle& oracle) {
  require_same_ring(chart.ring, b.ring(), "separate_boundary");
  if (!chart.relations.is_zero())
    fail(ErrorCode::oracle_cannot_resolve, "separation is implemented on affine space charts only");
  Ideal bad_root = bad_locus ? *bad_locus + chart.relations : semi_regular_locus(chart, b).bad_locus;

  ResolutionReport rep;
  rep.sequence = BlowUpSequence(chart);
  BlowUpSequence& seq = rep.sequence;

  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].empty || b[i].element.is_zero()) continue;
    Ideal Bi = Ideal::principal(b[i].element);

    auto snapshot = [&](std::map<std::string, Ideal>& strict, std::map<std::string, TransformedBoundary>& tr) {
      strict = strict_transform_sequence(seq, Bi);
      tr = transform_sequence(seq, b, TransformKind::complete);
    };
    std::map<std::string, Ideal> strict;
    std::map<std::string, TransformedBoundary> tr;
    snapshot(strict, tr);

    // Substeps (a)-(c): resolve the reduction of B_i^! with the restricted boundary, then push forward.
    std::vector<std::string> todo;
    for (const auto& leaf : seq.leaves())
      if (!separated(seq.chart(leaf), leaf_state(b, i, leaf, strict, tr))) todo.push_back(leaf);
    if (todo.empty()) continue;
    for (const auto& leaf : todo) {
      LeafState st = leaf_state(b, i, leaf, strict, tr);
      const Chart& lc = seq.chart(leaf);
      Chart xc = Chart::with_relations(lc.relations + squarefree_part(st.strict), leaf);
      Boundary bt(xc.relations);
      for (std::size_t k = 0; k < st.complete.size(); ++k)
        if (k != i && !st.complete[k].empty) bt.push_back(st.complete[k].id, st.complete[k].element);
      auto sub = oracle.resolve(xc, bt);
      if (!sub) fail(ErrorCode::oracle_cannot_resolve, oracle.name() + " cannot resolve the reduction of " + b[i].id + " at " + leaf);
      for (const auto& f : verify_desingularization(*sub, bt))
        if (!f.value) fail(ErrorCode::certification_failure, "oracle claim at " + leaf + " failed " + f.name + " " + f.detail);
      if (!sub->empty()) graft(seq, push_forward_sequence(*sub, seq.chart(leaf)));
    }

    // Substep (d): blow up factors of B_i^! that are non-reduced or lie in another component.
    snapshot(strict, tr);
    for (const auto& leaf : seq.leaves()) {
      LeafState st = leaf_state(b, i, leaf, strict, tr);
      if (st.strict.is_constant()) continue;
      Polynomial cut = Polynomial::constant(chart.ring, 1);
      for (const auto& [q, m] : factor_principal(st.strict).factors) {
        bool hit = m > 1;
        for (std::size_t k = 0; k < st.complete.size() && !hit; ++k)
          if (k != i && !st.complete[k].empty && !st.complete[k].element.is_zero() &&
              st.complete[k].element.divide_exact(q))
            hit = true;
        if (hit) cut *= q;
      }
      if (!cut.is_constant()) seq.blow_up_leaf(leaf, Center(Ideal::principal(cut)));
    }

    // Substep (e): kill the residual divisor along B_i^! by pairs of blow-ups.
    const unsigned guard = 64;
    unsigned rounds = 0;
    for (;;) {
      snapshot(strict, tr);
      bool acted = false;
      for (const auto& leaf : seq.leaves()) {
        LeafState st = leaf_state(b, i, leaf, strict, tr);
        if (st.strict.is_constant()) continue;
        const Polynomial& t = st.complete[i].element;
        auto Yq = t.divide_exact(st.strict);
        if (!Yq) fail(ErrorCode::verification_failure, "strict transform does not divide the principal transform at " + leaf);
        const Polynomial& Y = *Yq;
        Ideal S = Ideal::principal(st.strict);
        if ((S + Y).is_unit()) continue;
        std::optional<Polynomial> D;
        for (std::size_t k = 0; k < st.complete.size() && !D; ++k) {
          if (k == i || st.complete[k].empty) continue;
          const Polynomial& d = st.complete[k].element;
          int base = dimension(S + d);
          if (base >= 0 && dimension(S + d + Y) == base) D = d;
        }
        if (!D) fail(ErrorCode::oracle_cannot_resolve, "residual divisor at " + leaf + " is not carried by the boundary");
        std::vector<CenterComponent> comps;
        Ideal total = Ideal::unit(chart.ring);
        for (const auto& sa : factors_of(st.strict))
          for (const auto& db : factors_of(*D)) {
            Ideal J(chart.ring, {sa, db});
            if (J.is_unit()) continue;
            if (dimension(J + Y) != dimension(J)) continue;
            if (!is_linear_ideal(J))
              fail(ErrorCode::oracle_cannot_resolve, "non-linear gadget center " + J.to_string() + " at " + leaf);
            comps.push_back({J, std::nullopt});
            total = intersection(total, J);
          }
        if (comps.empty()) fail(ErrorCode::oracle_cannot_resolve, "no gadget center at " + leaf);
        if (++rounds > guard) fail(ErrorCode::resource_limit, "separation exceeded its round guard");
        std::vector<Chart> produced = seq.blow_up_leaf(leaf, Center(total, comps)).charts;
        for (const auto& c : produced)
          if (c.exceptional && !c.exceptional->is_constant())
            seq.blow_up_leaf(c.id, Center(Ideal::principal(*c.exceptional)));
        acted = true;
        break;
      }
      if (!acted) break;
    }
  }

  Flag sep = make_flag("separated", true);
  auto tr = transform_sequence(seq, b, TransformKind::complete);
  for (std::size_t i = 0; i < b.size() && sep.value; ++i) {
    if (b[i].empty || b[i].element.is_zero()) continue;
    auto strict = strict_transform_sequence(seq, Ideal::principal(b[i].element));
    for (const auto& leaf : seq.leaves())
      if (!separated(seq.chart(leaf), leaf_state(b, i, leaf, strict, tr))) {
        sep = make_flag(sep.name, false, b[i].id + " at " + leaf);
        break;
      }
  }
  for (const auto& leaf : seq.leaves()) rep.final_boundary.emplace(leaf, tr.at(leaf).complete());
  rep.flags.push_back(sep);
  rep.flags.push_back(detail::centers_regular_flag(seq));
  rep.flags.push_back(detail::centers_over_flag(seq, bad_root, "centers-supported"));
  return rep;
}

}  // namespace bcalc
