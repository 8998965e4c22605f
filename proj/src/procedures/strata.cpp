#include "bcalc/errors.hpp"
#include "common.hpp"

namespace bcalc {

using detail::make_flag;

ResolutionReport resolve_snc_strata(const Chart& chart, const Boundary& b) {
  require_same_ring(chart.ring, b.ring(), "resolve_snc_strata");
  RegularityReport snc = is_snc(chart, b);
  if (!snc.verdict) fail(ErrorCode::non_snc_input, "boundary " + b.to_string() + " is not snc");

  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].empty) live.push_back(i);

  ResolutionReport rep;
  rep.sequence = BlowUpSequence(chart);
  BlowUpSequence& seq = rep.sequence;
  for (std::size_t k = live.size(); k >= 1; --k) {
    std::vector<Ideal> closures;
    for (const auto& J : detail::k_subsets(live.size(), k)) {
      Ideal K = chart.relations;
      for (std::size_t t : J) K = K + b[live[t]].element;
      if (!K.is_unit()) closures.push_back(K);
    }
    std::vector<std::map<std::string, Ideal>> strict;
    for (const auto& K : closures) strict.push_back(strict_transform_sequence(seq, K));
    for (const auto& leaf : seq.leaves()) {
      std::vector<CenterComponent> comps;
      Ideal total = Ideal::unit(seq.chart(leaf).ring);
      for (const auto& s : strict) {
        const Ideal& S = s.at(leaf);
        if (S.is_unit()) continue;
        comps.push_back({S, std::nullopt});
        total = intersection(total, S);
      }
      if (comps.empty()) continue;
      seq.blow_up_leaf(leaf, Center(total, comps));
    }
  }

  auto principal = transform_sequence(seq, b, TransformKind::principal);
  auto complete = transform_sequence(seq, b, TransformKind::complete);
  Flag emptied = make_flag("principal-transform-empty", true);
  Flag snc_out = make_flag("complete-transform-snc", true);
  for (const auto& leaf : seq.leaves()) {
    for (const auto& c : principal.at(leaf).old_part.components())
      if (!c.empty && emptied.value) emptied = make_flag(emptied.name, false, "component " + c.id + " at " + leaf);
    Boundary cb = complete.at(leaf).complete();
    if (snc_out.value && !is_snc(seq.chart(leaf), cb).verdict) snc_out = make_flag(snc_out.name, false, "leaf " + leaf);
    rep.final_boundary.emplace(leaf, cb);
  }
  rep.flags.push_back(emptied);
  rep.flags.push_back(snc_out);
  rep.flags.push_back(detail::centers_over_flag(seq, chart.relations + support(b), "centers-over-support"));
  rep.flags.push_back(detail::centers_regular_flag(seq));
  return rep;
}

ResolutionReport principalize(const Chart& chart, const Ideal& Z, const DesingularizationOracle& oracle) {
  require_same_ring(chart.ring, Z.ring(), "principalize");
  RegularityReport reg = is_regular_scheme(chart);
  if (!reg.verdict) fail(ErrorCode::invalid_argument, "principalize needs a regular chart");
  ResolutionReport rep;
  rep.sequence = BlowUpSequence(chart);
  BlowUpSequence& seq = rep.sequence;
  Ideal Zc = Z + chart.relations;
  if (Zc.is_unit()) {
    rep.final_boundary.emplace(chart.id, Boundary(chart.relations, {Polynomial::constant(chart.ring, 1)}, {"Z"}));
    for (const char* n : {"regular", "total-transform-strictly-monomial", "centers-over-Z-and-singular-locus"})
      rep.flags.push_back(make_flag(n, true));
    return rep;
  }
  if (Z.is_zero()) fail(ErrorCode::invalid_argument, "cannot principalize the zero ideal");

  // Stage 1: blow up Z itself.
  const BlowUpRecord& rec = seq.blow_up_leaf(chart.id, Center(Z));
  auto pulled = total_transform(rec, Z);
  std::vector<std::pair<std::string, BlowUpSequence>> subs;
  for (const auto& c : rec.charts) {
    auto g = pulled.at(c.id).principal_generator();
    if (!g) fail(ErrorCode::verification_failure, "pullback of the center is not principal at " + c.id);
    Boundary bp(c.relations, {*g}, {"Z"});
    // Stage 2: resolve the pair (X', {Z'}).
    auto sub = oracle.resolve(c, bp);
    if (!sub) fail(ErrorCode::oracle_cannot_resolve, oracle.name() + " cannot resolve " + bp.to_string() + " at " + c.id);
    for (const auto& f : verify_desingularization(*sub, bp))
      if (!f.value)
        fail(ErrorCode::certification_failure, "oracle claim at " + c.id + " failed " + f.name + " " + f.detail);
    subs.emplace_back(c.id, std::move(*sub));
  }
  for (const auto& [id, sub] : subs) graft(seq, sub);

  Flag regular = make_flag("regular", true);
  Flag mono = make_flag("total-transform-strictly-monomial", true);
  auto total = total_transform_sequence(seq, Z);
  for (const auto& leaf : seq.leaves()) {
    const Chart& c = seq.chart(leaf);
    if (regular.value && !is_regular_scheme(c).verdict) regular = make_flag(regular.name, false, "leaf " + leaf);
    auto g = total.at(leaf).principal_generator();
    if (!g) {
      if (mono.value) mono = make_flag(mono.name, false, "not principal at " + leaf);
      continue;
    }
    Boundary zb(c.relations, {*g}, {"Z"});
    if (mono.value && !is_strictly_monomial(c, zb).verdict) mono = make_flag(mono.name, false, "leaf " + leaf);
    rep.final_boundary.emplace(leaf, zb);
  }
  rep.flags.push_back(regular);
  rep.flags.push_back(mono);
  rep.flags.push_back(
      detail::centers_over_flag(seq, ideal_product(Zc, reg.bad_locus), "centers-over-Z-and-singular-locus"));
  return rep;
}

}  // namespace bcalc
