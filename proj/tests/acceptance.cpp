// Acceptance suite: one PASS/FAIL line per criterion, each under its time budget.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "bcalc/errors.hpp"
#include "bcalc/poly/factor.hpp"
#include "bcalc/procedures/procedures.hpp"

using namespace bcalc;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto s : gens) g.push_back(P(r, s));
  return Ideal(r, g);
}

struct Check {
  bool ok = true;
  std::size_t cases = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

bool flags_ok(const std::vector<Flag>& flags, std::string* why) {
  for (const auto& f : flags)
    if (!f.value) {
      *why = f.name + (f.detail.empty() ? "" : " (" + f.detail + ")");
      return false;
    }
  return true;
}

// V(a) is inside V(b), modulo relations.
bool zero_set_inside(const Polynomial& a, const Polynomial& b, const Ideal& rel) {
  return radical_contains(rel + a, b);
}

Polynomial product(const std::vector<Polynomial>& ps, const RingPtr& r) {
  Polynomial out = Polynomial::constant(r, 1);
  for (const auto& p : ps) out *= p;
  return out;
}

// ---------- 1. chart lemma grid ----------

std::vector<Polynomial> catalog(const RingPtr& r, std::size_t n) {
  std::mt19937 rng(20240611u + static_cast<unsigned>(n));
  std::uniform_int_distribution<int> coef(-3, 3), exp(0, 2), terms(1, 3);
  std::vector<Polynomial> out;
  out.push_back(Polynomial::variable(r, 0) + Polynomial::variable(r, n));
  while (out.size() < 10) {
    Polynomial p = Polynomial::constant(r, 0);
    int t = terms(rng);
    for (int k = 0; k < t; ++k) {
      Polynomial m = Polynomial::constant(r, coef(rng));
      for (std::size_t v = 0; v <= n; ++v) m *= Polynomial::variable(r, v).pow(static_cast<unsigned>(exp(rng)));
      p += m;
    }
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

// Hand substitution: x -> x*y_j, then one factor of y_j comes off when it divides.
Polynomial predicted_residual(const Polynomial& phi, std::size_t j_var) {
  const RingPtr& r = phi.ring();
  Polynomial x = Polynomial::variable(r, 0);
  Polynomial yj = Polynomial::variable(r, j_var);
  Polynomial sub = phi.substitute_var(0, x * yj);
  auto q = sub.divide_exact(yj);
  return q ? *q : sub;
}

bool criterion_chartlem(std::string& detail) {
  Check c;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> names = {"x"};
    for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    RingPtr r = make_ring(names);
    Chart A = Chart::affine_space(r);
    std::vector<std::size_t> d;
    for (std::size_t i = 1; i <= n; ++i) d.push_back(i);
    auto cat = catalog(r, n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<unsigned> m(n);
      std::size_t cc = code;
      Polynomial mono = Polynomial::constant(r, 1);
      for (std::size_t i = 0; i < n; ++i) {
        m[i] = static_cast<unsigned>(cc % 4);
        cc /= 4;
        mono *= Polynomial::variable(r, i + 1).pow(m[i]);
      }
      for (std::size_t pi = 0; pi < cat.size(); ++pi) {
        Polynomial phi = mono + Polynomial::variable(r, 0) * cat[pi];
        for (std::size_t j = 0; j < n; ++j) {
          std::ostringstream tag;
          tag << "n=" << n << " m=" << code << " P#" << pi << " j=" << j + 1;
          GadgetResult g = chartlem_gadget(A, phi, 0, d, j);
          std::vector<unsigned> want = m;
          if (want[j] > 0) --want[j];
          c.expect(g.before.m == m, tag.str() + " before");
          c.expect(g.after.m == want, tag.str() + " after");
          Polynomial pred = predicted_residual(phi, j + 1);
          c.expect(Ideal::principal(pred).equals(Ideal::principal(g.residual)), tag.str() + " residual");
        }
      }
    }
  }
  detail = std::to_string(c.cases) + " checks";
  if (!c.ok) detail += "; first failure " + c.first_failure;
  return c.ok;
}

// ---------- 2. Whitney umbrella ----------

bool criterion_whitney(std::string& detail) {
  Check c;
  WhitneyReport w = whitney_umbrella_iterate(5);
  RingPtr r = w.sequence.root().ring;
  Polynomial umbrella = P(r, "x^2-z*y^2");
  c.expect(w.rounds.size() == 5, "round count");
  for (std::size_t k = 0; k < w.rounds.size(); ++k) {
    const auto& rd = w.rounds[k];
    c.expect(rd.matches && rd.non_monomial_at_origin, "round " + std::to_string(k + 1) + " flags");
    // Independent renaming: x = x1*z, y = y1*z turns the equation into z^2 times itself.
    const Chart& ch = w.sequence.chart(rd.chart);
    c.expect(ch.parent->images[0] == P(r, "x*z") && ch.parent->images[1] == P(r, "y*z") &&
                 ch.parent->images[2] == P(r, "z"),
             "chart map of " + rd.chart);
    Polynomial pulled = umbrella.substitute(ch.parent->images);
    c.expect(pulled == P(r, "z^2") * umbrella, "renamed equation");
  }
  c.expect(w.verdict(), "verdict");
  detail = "path " + (w.rounds.empty() ? std::string("-") : w.rounds.back().chart);
  if (!c.ok) detail += "; first failure " + c.first_failure;
  return c.ok;
}

// ---------- 3. support chain ----------

using Script = std::vector<std::pair<std::string, std::vector<std::string>>>;

BlowUpSequence replay(const RingPtr& r, const Script& s) {
  BlowUpSequence seq(Chart::affine_space(r));
  for (const auto& [chart, gens] : s) {
    std::vector<Polynomial> g;
    for (const auto& t : gens) g.push_back(P(r, t));
    seq.blow_up_leaf(chart, Center(Ideal(r, g)));
  }
  return seq;
}

// Product of every exceptional element above `leaf`, pulled back to it.
Polynomial exceptional_support(const BlowUpSequence& seq, const std::string& leaf) {
  const RingPtr& r = seq.chart(leaf).ring;
  Polynomial acc = Polynomial::constant(r, 1);
  std::string id = leaf;
  std::vector<std::vector<Polynomial>> maps;  // chart maps walked so far, leaf first
  while (true) {
    const Chart& c = seq.chart(id);
    if (c.exceptional) {
      Polynomial e = *c.exceptional;
      for (auto it = maps.rbegin(); it != maps.rend(); ++it) e = e.substitute(*it);
      acc *= e;
    }
    if (!c.parent || id == seq.root().id) break;
    maps.push_back(c.parent->images);
    id = c.parent->parent_id;
  }
  return acc;
}

bool criterion_support_chain(std::string& detail) {
  Check c;
  RingPtr r2 = make_ring({"x", "y"});
  RingPtr r3 = make_ring({"x", "y", "z"});
  std::vector<Script> s2 = {
      {{"r", {"x", "y"}}},
      {{"r", {"x", "y"}}, {"r/x", {"x", "y"}}},
      {{"r", {"x", "y"}}, {"r/y", {"x", "y"}}, {"r/y/x", {"x", "y"}}},
      {{"r", {"x"}}, {"r/E", {"x", "y"}}},
      {{"r", {"x", "y-1"}}},
  };
  std::vector<std::vector<std::string>> b2 = {{"x"}, {"x", "y"}, {"y-x^2"}, {"x^2*y"}, {"x*(x-y^2)"}, {"x+y", "x-y"}};
  std::vector<Script> s3 = {
      {{"r", {"x", "y", "z"}}},
      {{"r", {"x", "y"}}, {"r/x", {"x", "z"}}},
      {{"r", {"x", "y", "z"}}, {"r/z", {"x", "y"}}, {"r/z/y", {"y", "z"}}},
  };
  std::vector<std::vector<std::string>> b3 = {{"x"}, {"x*y", "z"}, {"x^2-z*y^2"}, {"x+y+z"}};
  std::size_t instances = 0;
  auto run = [&](const RingPtr& r, const Script& s, const std::vector<std::string>& elems) {
    ++instances;
    BlowUpSequence seq = replay(r, s);
    std::vector<Polynomial> es;
    for (const auto& e : elems) es.push_back(P(r, e));
    Boundary b(Ideal::zero(r), es);
    auto princ = transform_sequence(seq, b, TransformKind::principal);
    auto strict = strict_transform_sequence(seq, Ideal::principal(squarefree_part(support(b))));
    for (const auto& leaf : seq.leaves()) {
      const Chart& ch = seq.chart(leaf);
      auto img = seq.map_to_root(leaf);
      std::vector<Polynomial> tot, pr;
      for (const auto& e : es) tot.push_back(e.substitute(img));
      for (const auto& comp : princ.at(leaf).old_part.components()) pr.push_back(comp.element);
      Polynomial s = *strict.at(leaf).principal_generator();
      Polynomial E = exceptional_support(seq, leaf);
      Polynomial fp = product(pr, r), ft = product(tot, r), fc = fp * E;
      std::string tag = "instance " + std::to_string(instances) + " leaf " + leaf;
      c.expect(zero_set_inside(s, fp, ch.relations), tag + " strict in principal");
      c.expect(zero_set_inside(fp, ft, ch.relations), tag + " principal in total");
      c.expect(zero_set_inside(ft, fc, ch.relations), tag + " total in complete");
      c.expect(zero_set_inside(fc, s * E, ch.relations), tag + " complete in strict+E");
      c.expect(zero_set_inside(s * E, fc, ch.relations), tag + " strict+E in complete");
      // The engine's complete transform agrees with the hand-built one.
      Polynomial engine = schematic_support(transform_sequence(seq, b, TransformKind::complete).at(leaf).complete());
      c.expect(Ideal(r, {squarefree_part(engine)}).equals(Ideal(r, {squarefree_part(fc)})), tag + " engine complete");
    }
  };
  for (const auto& s : s2)
    for (const auto& b : b2) run(r2, s, b);
  for (const auto& s : s3)
    for (const auto& b : b3) run(r3, s, b);
  detail = std::to_string(instances) + " instances, " + std::to_string(c.cases) + " checks";
  if (!c.ok) detail += "; first failure " + c.first_failure;
  return c.ok && instances >= 25;
}

// ---------- 4. restriction compatibility ----------

bool criterion_restriction(std::string& detail) {
  Check c;
  RingPtr r2 = make_ring({"x", "y"});
  RingPtr r3 = make_ring({"x", "y", "z"});
  struct Case {
    RingPtr r;
    std::vector<std::string> Z;
    Script s;
    std::vector<std::string> b;
  };
  std::vector<Case> cases = {
      {r2, {"y"}, {{"r", {"x", "y"}}}, {"x", "x+y"}},
      {r2, {"y"}, {{"r", {"x", "y"}}, {"r/x", {"x", "y"}}}, {"x", "x+y", "x^2+y"}},
      {r2, {"y-x^2"}, {{"r", {"x", "y"}}}, {"x", "y"}},
      {r2, {"y-x^2"}, {{"r", {"x", "y"}}, {"r/x", {"x", "y"}}}, {"x", "y+x"}},
      {r2, {"y-x^2"}, {{"r", {"x", "y"}}, {"r/x", {"x", "y"}}, {"r/x/x", {"x", "y-1"}}}, {"x", "y"}},
      {r3, {"z"}, {{"r", {"x", "y", "z"}}}, {"x", "y", "x+z"}},
      {r3, {"z"}, {{"r", {"x", "z"}}, {"r/x", {"y", "z"}}}, {"x", "y-z"}},
      {r3, {"x^2-z*y^2"}, {{"r", {"x", "y", "z"}}}, {"z", "y"}},
      {r3, {"x^2-z*y^2"}, {{"r", {"x", "y", "z"}}, {"r/z", {"x", "y", "z"}}}, {"z", "y+z"}},
      {r3, {"y", "z"}, {{"r", {"x", "y", "z"}}, {"r/x", {"x", "y", "z"}}}, {"x", "x+y+z"}},
      {r3, {"z-x*y"}, {{"r", {"x", "z"}}}, {"x", "y"}},
  };
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const Case& cs = cases[k];
    std::vector<Polynomial> zg;
    for (const auto& g : cs.Z) zg.push_back(P(cs.r, g));
    Ideal Z(cs.r, zg);
    BlowUpSequence seq = replay(cs.r, cs.s);
    std::vector<Polynomial> es;
    for (const auto& e : cs.b) es.push_back(P(cs.r, e));
    Boundary b(Ideal::zero(cs.r), es);
    BlowUpSequence res = restrict_sequence(seq, Z);
    auto ambient = transform_sequence(seq, b, TransformKind::principal);
    auto restricted = transform_sequence(res, restrict_boundary(b, Z), TransformKind::principal);
    for (const auto& leaf : res.leaves()) {
      const Ideal& Zp = res.chart(leaf).relations;
      for (std::size_t i = 0; i < es.size(); ++i) {
        Ideal lhs = Zp + ambient.at(leaf).old_part[i].element;
        Ideal rhs = Zp + restricted.at(leaf).old_part[i].element;
        c.expect(lhs.equals(rhs), "case " + std::to_string(k + 1) + " leaf " + leaf + " component " + std::to_string(i + 1));
      }
    }
    // Remembered centers survive push-forward and a second restriction.
    std::string why;
    BlowUpSequence pushed = push_forward_sequence(res, seq.root());
    bool same = same_sequence(pushed, seq, &why);
    c.expect(same, "case " + std::to_string(k + 1) + " push-forward: " + why);
    same = same_sequence(restrict_sequence(pushed, Z), res, &why);
    c.expect(same, "case " + std::to_string(k + 1) + " round trip: " + why);
  }
  detail = std::to_string(cases.size()) + " instances, " + std::to_string(c.cases) + " checks";
  if (!c.ok) detail += "; first failure " + c.first_failure;
  return c.ok;
}

// ---------- 5. Cartier centers and nV ----------

bool criterion_blexam(std::string& detail) {
  Check c;
  RingPtr r = make_ring({"x", "y"});
  Chart A = Chart::affine_space(r);
  {
    Boundary b(A.relations, {P(r, "x"), P(r, "y")});
    BlowUpSequence seq(A);
    const BlowUpRecord& rec = seq.blow_up_leaf("r", Center(I(r, {"x"})));
    c.expect(rec.charts.size() == 1, "one chart");
    const Chart& ch = rec.charts[0];
    c.expect(ch.parent->images[0] == P(r, "x") && ch.parent->images[1] == P(r, "y"), "identity map");
    c.expect(ch.relations.is_zero(), "same chart");
    Boundary cb = transform_sequence(seq, b, TransformKind::complete).at(ch.id).complete();
    c.expect(cb.size() == 3 && cb[0].empty && !cb[1].empty && cb[1].element == P(r, "y") &&
                 cb[2].element == P(r, "x"),
             "component moved to the top: " + cb.to_string());
  }
  for (unsigned n = 1; n <= 3; ++n) {
    Boundary b(A.relations, {P(r, "x").pow(n)});
    BlowUpSequence seq(A);
    std::string leaf = "r";
    for (unsigned k = 1; k <= n; ++k) {
      seq.blow_up_leaf(leaf, Center(I(r, {"x"})));
      leaf += "/E";
      auto pr = transform_sequence(seq, b, TransformKind::principal).at(leaf).old_part;
      bool empty = pr[0].empty;
      c.expect(empty == (k == n), "nV n=" + std::to_string(n) + " after " + std::to_string(k));
      if (!empty) c.expect(pr[0].element == P(r, "x").pow(n - k), "nV power");
    }
  }
  detail = std::to_string(c.cases) + " checks";
  if (!c.ok) detail += "; first failure " + c.first_failure;
  return c.ok;
}

// ---------- 6. strata resolution ----------

bool criterion_strata(std::string& detail) {
  Check c;
  RingPtr r2 = make_ring({"x", "y"});
  RingPtr r3 = make_ring({"x", "y", "z"});
  std::vector<std::pair<RingPtr, std::vector<std::string>>> cat = {
      {r2, {}},
      {r2, {"x"}},
      {r2, {"x", "y"}},
      {r2, {"x+y", "x-y"}},
      {r2, {"x", "x-1"}},
      {r2, {"x", "y-1"}},
      {r2, {"y-x^2", "x"}},
      {r3, {"x"}},
      {r3, {"x", "y"}},
      {r3, {"x", "y", "z"}},
      {r3, {"x+y", "z"}},
      {r3, {"x", "y", "x+y+z-1"}},
  };
  for (std::size_t k = 0; k < cat.size(); ++k) {
    const auto& [r, elems] = cat[k];
    Chart A = Chart::affine_space(r);
    std::vector<Polynomial> es;
    for (const auto& e : elems) es.push_back(P(r, e));
    Boundary b(A.relations, es);
    std::string tag = "case " + std::to_string(k + 1);
    c.expect(is_snc(A, b).verdict, tag + " input snc");
    ResolutionReport rep = resolve_snc_strata(A, b);
    std::string why;
    c.expect(flags_ok(rep.flags, &why), tag + " " + why);
    // Recheck from scratch with the regularity module.
    auto pr = transform_sequence(rep.sequence, b, TransformKind::principal);
    auto co = transform_sequence(rep.sequence, b, TransformKind::complete);
    for (const auto& leaf : rep.sequence.leaves()) {
      for (const auto& comp : pr.at(leaf).old_part.components()) c.expect(comp.empty, tag + " principal empty at " + leaf);
      c.expect(is_snc(rep.sequence.chart(leaf), co.at(leaf).complete()).verdict, tag + " snc at " + leaf);
    }
  }
  detail = std::to_string(cat.size()) + " boundaries, " + std::to_string(c.cases) + " checks";
  if (!c.ok) detail += "; first failure " + c.first_failure;
  return c.ok;
}

// ---------- 7. principalization ----------

bool criterion_principalize(std::string& detail) {
  Check c;
  RingPtr r2 = make_ring({"x", "y"});
  RingPtr r3 = make_ring({"x", "y", "z"});
  std::vector<std::pair<RingPtr, std::vector<std::string>>> cat = {
      {r2, {"x", "y"}},
      {r2, {"x^2", "x*y"}},
      {r2, {"x^2", "x*y", "y^2"}},
      {r2, {"x^2*y", "x*y^2"}},
      {r3, {"x", "y", "z"}},
      {r3, {"x^2", "x*y", "x*z"}},
      {r3, {"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"}},
      {r3, {"x^2", "x*z"}},
  };
  for (std::size_t k = 0; k < cat.size(); ++k) {
    const auto& [r, gens] = cat[k];
    Chart A = Chart::affine_space(r);
    std::vector<Polynomial> g;
    for (const auto& s : gens) g.push_back(P(r, s));
    Ideal Z(r, g);
    std::string tag = "case " + std::to_string(k + 1) + " " + Z.to_string();
    ResolutionReport rep = principalize(A, Z, *default_oracle());
    std::string why;
    c.expect(flags_ok(rep.flags, &why), tag + " " + why);
    auto total = total_transform_sequence(rep.sequence, Z);
    for (const auto& leaf : rep.sequence.leaves()) {
      const Chart& ch = rep.sequence.chart(leaf);
      auto gen = total.at(leaf).principal_generator();
      c.expect(gen.has_value(), tag + " principal at " + leaf);
      if (gen) c.expect(is_strictly_monomial(ch, Boundary(ch.relations, {*gen})).verdict, tag + " monomial at " + leaf);
    }
    // Support: every center lies over |Z| (the charts are regular, so X_sing is empty).
    for (const auto& rec : rep.sequence.records()) {
      Ideal pulled = Z.substitute(rep.sequence.map_to_root(rec.source));
      for (const auto& gz : pulled.generators())
        c.expect(radical_contains(rec.center.ideal(), gz), tag + " center over Z at " + rec.source);
    }
  }
  detail = std::to_string(cat.size()) + " ideals, " + std::to_string(c.cases) + " checks";
  if (!c.ok) detail += "; first failure " + c.first_failure;
  return c.ok;
}

// ---------- 8. predicate catalog ----------

bool criterion_predicates(std::string& detail) {
  Check c;
  RingPtr r1 = make_ring({"x"});
  RingPtr r2 = make_ring({"x", "y"});
  RingPtr r3 = make_ring({"x", "y", "z"});
  auto A = [](const RingPtr& r) { return Chart::affine_space(r); };
  auto B = [](const Chart& ch, std::vector<Polynomial> e) { return Boundary(ch.relations, std::move(e)); };
  auto Q = [](const RingPtr& r, std::initializer_list<const char*> es) {
    std::vector<Polynomial> out;
    for (auto e : es) out.push_back(parse_polynomial(r, e));
    return out;
  };
  struct Row {
    std::string name;
    std::function<RegularityReport()> run;
    bool want;
  };
  Chart umbrella = Chart::with_relations(I(r3, {"x^2-z*y^2"}));
  Chart cross = Chart::with_relations(I(r2, {"x*y"}));
  std::vector<Row> rows = {
      {"regular A^2", [&] { return is_regular_scheme(A(r2)); }, true},
      {"regular umbrella", [&] { return is_regular_scheme(umbrella); }, false},
      {"regular crossing lines", [&] { return is_regular_scheme(cross); }, false},
      {"snc {x,y}", [&] { return is_snc(A(r2), B(A(r2), Q(r2, {"x", "y"}))); }, true},
      {"snc {x,x}", [&] { return is_snc(A(r2), B(A(r2), Q(r2, {"x", "x"}))); }, false},
      {"snc cusp", [&] { return is_snc(A(r2), B(A(r2), Q(r2, {"y^2-x^3"}))); }, false},
      {"snc three lines", [&] { return is_snc(A(r2), B(A(r2), Q(r2, {"x", "y", "x+y"}))); }, false},
      {"snc disjoint lines", [&] { return is_snc(A(r2), B(A(r2), Q(r2, {"x", "x-1"}))); }, true},
      {"strictly monomial x^2*y", [&] { return is_strictly_monomial(A(r2), B(A(r2), Q(r2, {"x^2*y"}))); }, true},
      {"snc x^2*y", [&] { return is_snc(A(r2), B(A(r2), Q(r2, {"x^2*y"}))); }, false},
      {"strictly monomial umbrella", [&] { return is_strictly_monomial(A(r3), B(A(r3), Q(r3, {"x^2-z*y^2"}))); }, false},
      {"strictly monomial empty", [&] { return is_strictly_monomial(A(r3), B(A(r3), {})); }, true},
      {"semi-regular {0,x}", [&] { return semi_regular_locus(A(r2), B(A(r2), Q(r2, {"0", "x"}))); }, true},
      {"semi-regular {x,x+x^2}", [&] { return semi_regular_locus(A(r1), B(A(r1), Q(r1, {"x", "x+x^2"}))); }, false},
      {"semi-regular crossing lines", [&] { return semi_regular_locus(cross, B(cross, {})); }, false},
      {"transversal x+y vs {x}", [&] { return is_transversal(A(r2), I(r2, {"x+y"}), B(A(r2), Q(r2, {"x"}))); }, true},
      {"snc-with x vs {x}", [&] { return has_snc_with_boundary(A(r2), I(r2, {"x"}), B(A(r2), Q(r2, {"x"}))); }, true},
      {"transversal x vs {x}", [&] { return is_transversal(A(r2), I(r2, {"x"}), B(A(r2), Q(r2, {"x"}))); }, false},
      {"snc-with cusp", [&] { return has_snc_with_boundary(A(r2), I(r2, {"y^2-x^3"}), B(A(r2), {})); }, false},
      {"permissible origin {x}", [&] { return is_permissible(A(r2), Center(I(r2, {"x", "y"})), B(A(r2), Q(r2, {"x"}))); }, true},
      {"permissible x-y {x,y}", [&] { return is_permissible(A(r2), Center(I(r2, {"x-y"})), B(A(r2), Q(r2, {"x", "y"}))); }, false},
      {"permissible regular center, empty B", [&] { return is_permissible(A(r2), Center(I(r2, {"x"})), B(A(r2), {})); }, true},
      {"permissible cusp center, empty B", [&] { return is_permissible(A(r2), Center(I(r2, {"y^2-x^3"})), B(A(r2), {})); }, false},
  };
  for (const auto& row : rows) {
    RegularityReport rep = row.run();
    c.expect(rep.verdict == row.want, row.name);
    c.expect(rep.verdict == rep.bad_locus.is_unit(), row.name + " bad locus consistency");
  }
  // Recorded loci.
  c.expect(vanishes_on(is_regular_scheme(umbrella).bad_locus, I(r3, {"x", "y"})), "umbrella bad locus holds the z-axis");
  c.expect(dimension(semi_regular_locus(cross, B(cross, {})).bad_locus) == 0, "crossing lines semi-regular at maximal points");
  // snc implies semi-regular on the boundary rows.
  for (const auto& es : {Q(r2, {"x", "y"}), Q(r2, {"x", "x-1"}), Q(r2, {"x", "x"}), Q(r2, {"x^2*y"})}) {
    Boundary b = B(A(r2), es);
    if (is_snc(A(r2), b).verdict) c.expect(semi_regular_locus(A(r2), b).verdict, "snc implies semi-regular");
  }
  detail = std::to_string(rows.size()) + " cases, " + std::to_string(c.cases) + " checks";
  if (!c.ok) detail += "; first failure " + c.first_failure;
  return c.ok;
}

// ---------- 9. functoriality ----------

bool criterion_functoriality(std::string& detail) {
  Check c;
  RingPtr r2 = make_ring({"x", "y"});
  RingPtr r3 = make_ring({"x", "y", "z"});
  struct Scene {
    std::string name;
    RingPtr r;
    std::function<BlowUpSequence(const Chart&, const std::vector<Polynomial>&)> run;
    std::vector<std::string> data;
  };
  auto strata = [](const Chart& ch, const std::vector<Polynomial>& d) {
    return resolve_snc_strata(ch, Boundary(ch.relations, d)).sequence;
  };
  auto princ = [](const Chart& ch, const std::vector<Polynomial>& d) {
    return principalize(ch, Ideal(ch.ring, d), *default_oracle()).sequence;
  };
  auto sep = [](const Chart& ch, const std::vector<Polynomial>& d) {
    ScriptedOracle o({{"r", {"x", "y"}}, {"r/y", {"x", "y"}}});
    return separate_boundary(ch, Boundary(ch.relations, d), std::nullopt, o).sequence;
  };
  std::vector<Scene> scenes = {
      {"strata {x,y}", r2, strata, {"x", "y"}},
      {"strata {x,y,z}", r3, strata, {"x", "y", "z"}},
      {"strata {x,y-1}", r2, strata, {"x", "y-1"}},
      {"principalize x(x,y)", r2, princ, {"x^2", "x*y"}},
      {"principalize (x,y,z)", r3, princ, {"x", "y", "z"}},
      {"separate x(x-y^2)", r2, sep, {"x*(x-y^2)"}},
  };
  for (const auto& sc : scenes) {
    Chart X = Chart::affine_space(sc.r);
    std::vector<Polynomial> d;
    for (const auto& s : sc.data) d.push_back(P(sc.r, s));
    BlowUpSequence base = sc.run(X, d);
    std::vector<Rational> scale;
    for (std::size_t i = 0; i < sc.r->size(); ++i) scale.push_back(Rational(static_cast<long>(i) + 2, i % 2 ? 3 : 1) * (i % 2 ? -1 : 1));
    std::vector<std::pair<std::string, RegularMorphism>> gs = {
        {"fresh variable", fresh_variable_extension(sc.r, "t")},
        {"linear change", diagonal_change(sc.r, scale)},
    };
    for (const auto& [gname, g] : gs) {
      Chart Y = Chart::affine_space(g.target);
      std::vector<Polynomial> gd;
      for (const auto& p : d) gd.push_back(p.substitute(g.images));
      BlowUpSequence again = sc.run(Y, gd);
      BlowUpSequence pulled = pullback_sequence(base, g);
      std::string why;
      c.expect(base.size() > 0, sc.name + " nonempty");
      bool same = same_sequence(pulled, again, &why);
      c.expect(same, sc.name + " / " + gname + ": " + why);
    }
  }
  detail = std::to_string(scenes.size()) + " scenes, " + std::to_string(c.cases) + " checks";
  if (!c.ok) detail += "; first failure " + c.first_failure;
  return c.ok;
}

// ---------- 10. permissible blow-ups ----------

bool criterion_permissible(std::string& detail) {
  Check c;
  RingPtr r2 = make_ring({"x", "y"});
  RingPtr r3 = make_ring({"x", "y", "z"});
  struct Case {
    RingPtr r;
    std::vector<std::string> b;
    std::vector<std::string> center;
  };
  std::vector<Case> cases = {
      {r2, {"x"}, {"x", "y"}},
      {r2, {"x", "y"}, {"x", "y"}},
      {r2, {"x", "y"}, {"x"}},
      {r2, {"x"}, {"y"}},
      {r2, {"x"}, {"x", "y-1"}},
      {r2, {"y-x^2"}, {"x", "y"}},
      {r3, {"x", "y"}, {"x", "y", "z"}},
      {r3, {"x", "y"}, {"x", "y"}},
      {r3, {"x", "y", "z"}, {"x", "z"}},
      {r3, {"x"}, {"y", "z"}},
  };
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const Case& cs = cases[k];
    Chart A = Chart::affine_space(cs.r);
    std::vector<Polynomial> es, cg;
    for (const auto& e : cs.b) es.push_back(P(cs.r, e));
    for (const auto& g : cs.center) cg.push_back(P(cs.r, g));
    Boundary b(A.relations, es);
    Center ctr(Ideal(cs.r, cg));
    std::string tag = "case " + std::to_string(k + 1);
    c.expect(is_snc(A, b).verdict && is_permissible(A, ctr, b).verdict, tag + " precondition");
    BlowUpRecord rec = blow_up(A, ctr);
    auto tr = transform_record(rec, b, TransformKind::complete);
    for (const auto& ch : rec.charts) {
      const TransformedBoundary& t = tr.at(ch.id);
      c.expect(is_snc(ch, t.complete()).verdict, tag + " snc at " + ch.id);
      for (std::size_t i = 0; i < es.size(); ++i) {
        Ideal strict = strict_transform(rec, Ideal::principal(es[i])).at(ch.id);
        c.expect(strict.equals(ch.relations + t.old_part[i].element), tag + " principal = strict at " + ch.id);
      }
    }
  }
  detail = std::to_string(cases.size()) + " cases, " + std::to_string(c.cases) + " checks";
  if (!c.ok) detail += "; first failure " + c.first_failure;
  return c.ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<bool(std::string&)> run;
  };
  std::vector<Criterion> all = {
      {1, "chart-lemma grid", 60, criterion_chartlem},
      {2, "Whitney umbrella self-similarity", 5, criterion_whitney},
      {3, "support chain", 120, criterion_support_chain},
      {4, "restriction compatibility", 60, criterion_restriction},
      {5, "Cartier centers and nV", 10, criterion_blexam},
      {6, "strata resolution", 60, criterion_strata},
      {7, "principalization", 120, criterion_principalize},
      {8, "predicate catalog", 30, criterion_predicates},
      {9, "functoriality", 60, criterion_functoriality},
      {10, "permissible blow-ups", 60, criterion_permissible},
  };
  int failed = 0;
  for (const auto& cr : all) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = cr.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= cr.limit_s;
    if (!in_time) detail += "; over the time limit";
    bool pass = ok && in_time;
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << cr.id << " (" << cr.name << "): " << std::fixed
              << std::setprecision(2) << secs << "s / " << std::setprecision(0) << cr.limit_s << "s, " << detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
