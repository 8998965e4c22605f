#include "bcalc/errors.hpp"
#include "common.hpp"

namespace bcalc {

bool WhitneyReport::verdict() const {
  if (rounds.empty()) return false;
  for (const auto& r : rounds)
    if (!r.matches || !r.non_monomial_at_origin) return false;
  return true;
}

WhitneyReport whitney_umbrella_iterate(unsigned k) {
  if (k < 1 || k > 12) fail(ErrorCode::invalid_argument, "rounds must be between 1 and 12");
  RingPtr R = make_ring({"x", "y", "z"});
  Polynomial umbrella = parse_polynomial(R, "x^2-z*y^2");
  const Ideal model = Ideal::principal(umbrella);
  WhitneyReport rep;
  rep.sequence = BlowUpSequence(Chart::affine_space(R));
  std::string leaf = "r";
  Ideal current = model;
  for (unsigned round = 0; round < k; ++round) {
    Ideal origin(R, {Polynomial::variable(R, 0), Polynomial::variable(R, 1), Polynomial::variable(R, 2)});
    const BlowUpRecord& rec = rep.sequence.blow_up_leaf(leaf, Center(origin));
    auto strict = strict_transform(rec, current);
    WhitneyRound wr;
    wr.chart = leaf + "/z";
    for (const auto& c : rec.charts) {
      const Ideal& S = strict.at(c.id);
      if (S.is_unit()) continue;
      Ideal sing = rank_deficiency_ideal(S, 1);
      if (c.exceptional && dimension(sing + *c.exceptional) >= 0) wr.singular_charts.push_back(c.id);
    }
    const Ideal& next = strict.at(wr.chart);
    auto g = next.principal_generator();
    if (g) {
      *g = g->primitive();
      if (g->leading_coefficient() < 0) *g = -*g;
    }
    wr.strict_transform = g ? g->to_string() : next.to_string();
    // Chart coordinates already carry the renamed names x1 = x/z, y1 = y/z.
    wr.matches = next.equals(model);
    if (g) {
      bool vanishes = g->evaluate({0, 0, 0}) == 0;
      bool divisible = false;
      for (std::size_t v = 0; v < 3; ++v) divisible = divisible || g->order_in(v) > 0;
      wr.non_monomial_at_origin = vanishes && !divisible && !g->is_monomial();
    }
    rep.rounds.push_back(wr);
    leaf = wr.chart;
    current = next;
  }
  return rep;
}

}  // namespace bcalc
