#include <algorithm>
#include <numeric>

#include "bcalc/errors.hpp"
#include "common.hpp"

namespace bcalc {

namespace {

void require_shape(const Chart& chart, const Polynomial& phi, std::size_t y_var, const std::vector<std::size_t>& d_vars) {
  require_same_ring(chart.ring, phi.ring(), "chartlem");
  if (!chart.relations.is_zero()) fail(ErrorCode::shape_mismatch, "chart is not an affine space");
  if (y_var >= chart.ring->size()) fail(ErrorCode::shape_mismatch, "divisor variable out of range");
  for (std::size_t v : d_vars)
    if (v >= chart.ring->size() || v == y_var) fail(ErrorCode::shape_mismatch, "bad boundary variable");
}

bool same_up_to_unit(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.primitive() == b.primitive() || a.primitive() == (-b).primitive();
}

}  // namespace

MultiplicityVector restricted_multiplicities(const Polynomial& phi, std::size_t y_var,
                                             const std::vector<std::size_t>& d_vars) {
  Polynomial r = phi.substitute_var(y_var, Polynomial::constant(phi.ring(), 0));
  if (r.is_zero()) fail(ErrorCode::shape_mismatch, "Z contains Y");
  if (!r.is_monomial()) fail(ErrorCode::shape_mismatch, "restriction " + r.to_string() + " is not a monomial");
  for (std::size_t v : r.support_variables())
    if (std::find(d_vars.begin(), d_vars.end(), v) == d_vars.end())
      fail(ErrorCode::shape_mismatch, "restriction " + r.to_string() + " involves a variable outside the boundary");
  MultiplicityVector m;
  for (std::size_t v : d_vars) m.m.push_back(r.degree_in(v));
  return m;
}

GadgetResult chartlem_gadget(const Chart& chart, const Polynomial& phi, std::size_t y_var,
                             const std::vector<std::size_t>& d_vars, std::size_t j) {
  require_shape(chart, phi, y_var, d_vars);
  if (j >= d_vars.size()) fail(ErrorCode::invalid_argument, "component index out of range");
  const RingPtr& R = chart.ring;
  GadgetResult res;
  res.before = restricted_multiplicities(phi, y_var, d_vars);
  res.rounds = 1;

  Polynomial x = Polynomial::variable(R, y_var);
  Polynomial yj = Polynomial::variable(R, d_vars[j]);
  BlowUpSequence seq(chart);
  seq.blow_up_leaf(chart.id, Center(Ideal(R, {x, yj})));
  std::string leaf1 = chart.id + "/" + R->name(d_vars[j]);
  if (!seq.has_chart(leaf1)) fail(ErrorCode::verification_failure, "missing chart " + leaf1);
  const Chart& c1 = seq.chart(leaf1);
  if (!c1.exceptional) fail(ErrorCode::verification_failure, "chart " + leaf1 + " has no exceptional divisor");
  seq.blow_up_leaf(leaf1, Center(Ideal::principal(*c1.exceptional)));
  std::string leaf2 = leaf1 + "/E";
  if (!seq.has_chart(leaf2)) fail(ErrorCode::verification_failure, "missing chart " + leaf2);

  // Y'' = Y: the strict transform of V(x) lives only on leaf2 and is V(x) there.
  auto strict = strict_transform_sequence(seq, Ideal::principal(x));
  for (const auto& leaf : seq.leaves()) {
    const Ideal& s = strict.at(leaf);
    bool ok = leaf == leaf2 ? s.equals(Ideal::principal(x)) : s.is_unit();
    if (!ok) fail(ErrorCode::verification_failure, "strict transform of Y at " + leaf + " is " + s.to_string());
  }
  auto img = seq.map_to_root(leaf2);
  for (std::size_t v : d_vars)
    if (img[v] != Polynomial::variable(R, v))
      fail(ErrorCode::verification_failure, "chart map moves " + R->name(v));
  if (!Ideal::principal(x).contains(img[y_var]))
    fail(ErrorCode::verification_failure, "chart map does not preserve Y");

  auto tr = transform_sequence(seq, Boundary(chart.relations, {x * phi}), TransformKind::principal);
  Polynomial p = tr.at(leaf2).old_part[0].element;
  auto q = p.divide_exact(x);
  if (!q) fail(ErrorCode::verification_failure, "principal transform " + p.to_string() + " lost Y");
  res.residual = *q;
  res.after = restricted_multiplicities(res.residual, y_var, d_vars);
  MultiplicityVector want = res.before;
  if (want.m[j] > 0) want.m[j] -= 1;
  if (want.m != res.after.m) fail(ErrorCode::verification_failure, "multiplicity update does not match");
  res.sequence = std::move(seq);
  res.leaf = leaf2;
  return res;
}

GadgetResult kill_restricted_divisor(const Chart& chart, const Polynomial& phi, std::size_t y_var,
                                     const std::vector<std::size_t>& d_vars) {
  require_shape(chart, phi, y_var, d_vars);
  GadgetResult res;
  res.before = restricted_multiplicities(phi, y_var, d_vars);
  res.after = res.before;
  res.residual = phi;
  res.sequence = BlowUpSequence(chart);
  res.leaf = chart.id;
  const std::size_t budget = std::accumulate(res.before.m.begin(), res.before.m.end(), std::size_t{0});
  while (true) {
    auto it = std::find_if(res.after.m.begin(), res.after.m.end(), [](unsigned v) { return v > 0; });
    if (it == res.after.m.end()) break;
    if (res.rounds >= budget) fail(ErrorCode::verification_failure, "round count exceeds the multiplicity sum");
    std::size_t j = static_cast<std::size_t>(it - res.after.m.begin());
    GadgetResult g = chartlem_gadget(res.sequence.chart(res.leaf), res.residual, y_var, d_vars, j);
    graft(res.sequence, g.sequence);
    res.leaf = g.leaf;
    res.residual = g.residual;
    res.after = g.after;
    ++res.rounds;
  }
  Polynomial x = Polynomial::variable(chart.ring, y_var);
  if (res.rounds > 0) {
    auto tr = transform_sequence(res.sequence, Boundary(chart.relations, {x * phi}), TransformKind::principal);
    if (!same_up_to_unit(tr.at(res.leaf).old_part[0].element, x * res.residual))
      fail(ErrorCode::verification_failure, "iterated gadgets disagree with the composed transform");
  }
  Polynomial r = res.residual.substitute_var(y_var, Polynomial::constant(chart.ring, 0));
  if (!r.is_constant() || r.is_zero() || !(Ideal::principal(x) + res.residual).is_unit())
    fail(ErrorCode::verification_failure, "restricted divisor did not vanish");
  return res;
}

}  // namespace bcalc
