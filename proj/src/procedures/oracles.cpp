#include <algorithm>

#include "bcalc/errors.hpp"
#include "bcalc/poly/factor.hpp"
#include "common.hpp"

namespace bcalc {

namespace {

std::string replace_root(const std::string& step_chart, const std::string& root_id) {
  if (step_chart == "r") return root_id;
  if (step_chart.rfind("r/", 0) == 0) return root_id + step_chart.substr(1);
  return step_chart;
}

struct FactorUse {
  Polynomial q;
  unsigned total = 0;       // multiplicity summed over components
  std::size_t holders = 0;  // components containing q
  bool repeated = false;
};

// Factor to blow up next, or nothing when the boundary is already semi-regular
// (the caller checks that) or no factor lies in the bad locus.
std::optional<Polynomial> pick_divisor(const Boundary& cb, const Ideal& bad) {
  std::vector<FactorUse> uses;
  std::vector<std::size_t> factor_count;
  std::vector<std::vector<std::size_t>> comp_factors;
  for (const auto& c : cb.components()) {
    comp_factors.emplace_back();
    if (c.empty || c.element.is_zero() || c.element.is_constant()) continue;
    for (const auto& [f, m] : factor_principal(c.element).factors) {
      std::size_t k = 0;
      while (k < uses.size() && uses[k].q != f) ++k;
      if (k == uses.size()) uses.push_back({f, 0, 0, false});
      uses[k].total += m;
      uses[k].holders += 1;
      if (m > 1) uses[k].repeated = true;
      comp_factors.back().push_back(k);
    }
  }
  auto inside = [&](const Polynomial& q) { return vanishes_on(bad, Ideal::principal(q)); };
  for (const auto& u : uses)
    if (u.holders > 1 && inside(u.q)) return u.q;
  for (const auto& u : uses)
    if (u.repeated && inside(u.q)) return u.q;
  for (const auto& cf : comp_factors)
    if (cf.size() > 1)
      for (std::size_t k : cf)
        if (inside(uses[k].q)) return uses[k].q;
  return std::nullopt;
}

}  // namespace

std::optional<BlowUpSequence> IdentityOracle::resolve(const Chart& chart, const Boundary& b) const {
  try {
    if (semi_regular_locus(chart, b).verdict) return BlowUpSequence(chart);
  } catch (const Error&) {
  }
  return std::nullopt;
}

std::optional<BlowUpSequence> StrataOracle::resolve(const Chart& chart, const Boundary& b) const {
  try {
    if (!is_snc(chart, b).verdict) return std::nullopt;
    return resolve_snc_strata(chart, b).sequence;
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<BlowUpSequence> MonomialOracle::resolve(const Chart& chart, const Boundary& b) const {
  try {
    if (!chart.relations.is_zero()) return std::nullopt;
    if (!is_strictly_monomial(chart, b).verdict) return std::nullopt;
    BlowUpSequence seq(chart);
    const unsigned guard = 64;
    for (unsigned round = 0; round <= guard; ++round) {
      auto tr = transform_sequence(seq, b, TransformKind::complete);
      std::vector<std::string> leaves = seq.leaves();
      bool done = true;
      for (const auto& leaf : leaves) {
        const Chart& c = seq.chart(leaf);
        Boundary cb = tr.at(leaf).complete();
        RegularityReport rep = semi_regular_locus(c, cb);
        if (rep.verdict) continue;
        done = false;
        auto q = pick_divisor(cb, rep.bad_locus);
        if (!q) return std::nullopt;
        seq.blow_up_leaf(leaf, Center(Ideal::principal(*q)));
        break;
      }
      if (done) return seq;
    }
    return std::nullopt;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::resource_limit) throw;
    return std::nullopt;
  }
}

std::optional<BlowUpSequence> ScriptedOracle::resolve(const Chart& chart, const Boundary&) const {
  try {
    BlowUpSequence seq(chart);
    for (const auto& st : steps_) {
      std::vector<Polynomial> gens;
      for (const auto& g : st.center) gens.push_back(parse_polynomial(chart.ring, g));
      seq.blow_up_leaf(replace_root(st.chart, chart.id), Center(Ideal(chart.ring, gens)));
    }
    return seq;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::resource_limit) throw;
    return std::nullopt;
  }
}

std::string ChainOracle::name() const {
  std::string s;
  for (const auto& m : members_) {
    if (!s.empty()) s += "+";
    s += m->name();
  }
  return s;
}

std::optional<BlowUpSequence> ChainOracle::resolve(const Chart& chart, const Boundary& b) const {
  for (const auto& m : members_)
    if (auto seq = m->resolve(chart, b)) return seq;
  return std::nullopt;
}

std::shared_ptr<const DesingularizationOracle> default_oracle() {
  static const std::shared_ptr<const DesingularizationOracle> chain = std::make_shared<ChainOracle>(
      std::vector<std::shared_ptr<const DesingularizationOracle>>{
          std::make_shared<IdentityOracle>(), std::make_shared<MonomialOracle>(), std::make_shared<StrataOracle>()});
  return chain;
}

std::vector<Flag> verify_desingularization(const BlowUpSequence& seq, const Boundary& b) {
  using detail::make_flag;
  std::vector<Flag> flags;
  const Chart& root = seq.root();
  try {
    auto tr = transform_sequence(seq, b, TransformKind::complete);
    Flag semi = make_flag("semi-regular", true);
    for (const auto& leaf : seq.leaves()) {
      if (!semi_regular_locus(seq.chart(leaf), tr.at(leaf).complete()).verdict) {
        semi = make_flag("semi-regular", false, "leaf " + leaf);
        break;
      }
    }
    flags.push_back(semi);
  } catch (const Error& e) {
    flags.push_back(make_flag("semi-regular", false, e.what()));
  }
  flags.push_back(detail::centers_regular_flag(seq));
  try {
    Ideal bad = semi_regular_locus(root, b).bad_locus;
    flags.push_back(detail::centers_over_flag(seq, bad, "centers-over-bad-locus"));
  } catch (const Error& e) {
    flags.push_back(make_flag("centers-over-bad-locus", false, e.what()));
  }
  return flags;
}

}  // namespace bcalc
