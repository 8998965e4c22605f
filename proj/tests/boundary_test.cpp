#include <gtest/gtest.h>

#include "bcalc/boundary/boundary.hpp"
#include "bcalc/errors.hpp"
#include "test_util.hpp"

using namespace bcalc;
using bcalc::testing::I;
using bcalc::testing::P;

namespace {

RingPtr R2() { return make_ring({"x", "y"}); }

Boundary B(const RingPtr& r, std::initializer_list<const char*> elems, const Ideal* rel = nullptr) {
  std::vector<Polynomial> e;
  for (auto s : elems) e.push_back(P(r, s));
  return Boundary(rel ? *rel : Ideal::zero(r), e);
}

std::vector<std::string> strs(const Boundary& b) {
  std::vector<std::string> v;
  for (const auto& c : b.components()) v.push_back(c.element.to_string());
  return v;
}

using SV = std::vector<std::string>;

}  // namespace

TEST(Boundary, ReducedFormAndUnion) {
  auto r = R2();
  auto b = B(r, {"x", "1", "y"});
  EXPECT_TRUE(b[1].empty);
  EXPECT_EQ(strs(reduced_form(b)), (SV{"x", "y"}));
  EXPECT_EQ(strs(reduced_form(reduced_form(b))), (SV{"x", "y"}));
  EXPECT_EQ(reduced_form(B(r, {"1", "-3"})).size(), 0u);
  EXPECT_EQ(strs(ordered_union(B(r, {"x"}), B(r, {"y"}))), (SV{"x", "y"}));
  EXPECT_EQ(strs(ordered_union(B(r, {"x"}), B(r, {}))), (SV{"x"}));
  EXPECT_NE(strs(ordered_union(B(r, {"x"}), B(r, {"y"}))), strs(ordered_union(B(r, {"y"}), B(r, {"x"}))));
}

TEST(Boundary, EmptyFlagUsesRelations) {
  auto r = R2();
  Ideal rel = I(r, {"x-1"});
  auto b = B(r, {"x", "y"}, &rel);
  EXPECT_TRUE(b[0].empty);
  EXPECT_FALSE(b[1].empty);
}

TEST(Boundary, Supports) {
  auto r = R2();
  auto b = B(r, {"x", "x*y"});
  EXPECT_EQ(support(b).to_string(), "x*y");
  EXPECT_EQ(schematic_support(b).to_string(), "x^2*y");
  EXPECT_EQ(support(B(r, {})).to_string(), "1");
  EXPECT_EQ(schematic_support(B(r, {})).to_string(), "1");
  EXPECT_EQ(support(B(r, {"x^2"})).to_string(), "x");
  EXPECT_EQ(schematic_support(B(r, {"x^2"})).to_string(), "x^2");
}

TEST(Boundary, Strata) {
  auto r = R2();
  auto b = B(r, {"x", "y"});
  auto q = stratum(b, {0, 1});
  EXPECT_TRUE(q.closure.equals(I(r, {"x", "y"})));
  EXPECT_EQ(q.dimension, 0);
  EXPECT_TRUE(q.nonempty);
  auto e = stratum(b, {});
  EXPECT_TRUE(e.closure.is_zero());
  EXPECT_EQ(e.dimension, 2);
  auto d = B(r, {"x", "x"});
  auto both = stratum(d, {0, 1});
  EXPECT_TRUE(both.closure.equals(stratum(d, {0}).closure));
  EXPECT_TRUE(both.nonempty);
  EXPECT_FALSE(stratum(d, {0}).nonempty);
  EXPECT_FALSE(stratum(d, {1}).nonempty);
}

TEST(Boundary, Restriction) {
  auto r = R2();
  auto on_x = restrict_boundary(B(r, {"x"}), I(r, {"x"}));
  EXPECT_TRUE(on_x[0].element.is_zero());
  EXPECT_FALSE(on_x[0].empty);
  auto y = restrict_boundary(B(r, {"y"}), I(r, {"x"}));
  EXPECT_EQ(y[0].element.to_string(), "y");
  EXPECT_FALSE(y[0].empty);
  // Pullback along a chart map equals the total transform.
  auto rec = blow_up(Chart::affine_space(r), Center(I(r, {"x", "y"})));
  for (const auto& c : rec.charts) {
    auto pb = pullback_boundary(B(r, {"x+y^2"}), c.parent->images, c.relations);
    auto tot = total_transform(rec, I(r, {"x+y^2"})).at(c.id);
    EXPECT_TRUE(Ideal::principal(pb[0].element).equals(tot));
  }
}

TEST(Transform, CartierCenterMovesComponentToTop) {
  auto r = R2();
  auto b = B(r, {"x", "y"});
  auto rec = blow_up(Chart::affine_space(r), Center(I(r, {"x"})));
  ASSERT_EQ(rec.charts.size(), 1u);
  auto t = transform_record(rec, b, TransformKind::complete).at(rec.charts[0].id);
  EXPECT_TRUE(t.old_part[0].empty);
  EXPECT_EQ(t.provenance[0], "subtract:0");
  EXPECT_EQ(t.provenance[1], "pullback");
  EXPECT_EQ(strs(reduced_form(t.complete())), (SV{"y", "x"}));
}

TEST(Transform, MultipleOfCenterEmptiesAfterNBlowUps) {
  auto r = R2();
  for (int n = 1; n <= 3; ++n) {
    BlowUpSequence seq(Chart::affine_space(r));
    std::string leaf = "r";
    Polynomial f = P(r, "x").pow(n);
    for (int k = 0; k < n; ++k) {
      auto before = transform_sequence(seq, Boundary(Ideal::zero(r), {f}), TransformKind::principal);
      EXPECT_FALSE(before.at(leaf).old_part[0].empty) << n << " " << k;
      leaf = seq.blow_up_leaf(leaf, Center(I(r, {"x"}))).charts[0].id;
    }
    auto after = transform_sequence(seq, Boundary(Ideal::zero(r), {f}), TransformKind::principal);
    EXPECT_TRUE(after.at(leaf).old_part[0].empty) << n;
  }
}

TEST(Transform, CenterOutsideSubschemeKeepsPullback) {
  auto r = R2();
  auto rec = blow_up(Chart::affine_space(r), Center(I(r, {"x", "y"})));
  auto b = B(r, {"x-1"});
  for (auto& [id, t] : transform_record(rec, b, TransformKind::principal)) {
    EXPECT_EQ(t.provenance[0], "pullback");
    EXPECT_EQ(t.old_part[0].element, normalize_element(P(r, "x-1").substitute(rec.charts[rec.chart_index(id)].parent->images), Ideal::zero(r)));
  }
}

TEST(Transform, MaximalVersusPrincipal) {
  auto r = R2();
  auto rec = blow_up(Chart::affine_space(r), Center(I(r, {"x"})));
  const std::string id = rec.charts[0].id;
  auto two = B(r, {"x^2"});
  EXPECT_EQ(transform_record(rec, two, TransformKind::maximal).at(id).old_part[0].element.to_string(), "1");
  EXPECT_EQ(transform_record(rec, two, TransformKind::principal).at(id).old_part[0].element.to_string(), "x");
  auto coprime = B(r, {"y+1"});
  for (auto k : {TransformKind::total, TransformKind::principal, TransformKind::maximal})
    EXPECT_EQ(transform_record(rec, coprime, k).at(id).old_part[0].element.to_string(), "y+1");
  auto one = B(r, {"x"});
  EXPECT_TRUE(transform_record(rec, one, TransformKind::maximal).at(id).old_part[0].empty);
  EXPECT_TRUE(transform_record(rec, one, TransformKind::principal).at(id).old_part[0].empty);
}

TEST(Transform, MaximalTakesMinimumOverCharts) {
  auto r = R2();
  auto rec = blow_up(Chart::affine_space(r), Center(I(r, {"x", "y"})));
  // x^2*y: x-chart x^3*y, y-chart x^2*y^3. Both divisible by the cube of E.
  auto t = transform_record(rec, B(r, {"x^2*y"}), TransformKind::maximal);
  EXPECT_EQ(t.at("r/x").old_part[0].element.to_string(), "y");
  EXPECT_EQ(t.at("r/y").old_part[0].element.to_string(), "x^2");
  EXPECT_EQ(t.at("r/x").provenance[0], "maximal:0^3");
}

TEST(Transform, EmptyBoundaryGetsExceptional) {
  auto r = R2();
  auto rec = blow_up(Chart::affine_space(r), Center(I(r, {"x", "y"})));
  auto t = transform_record(rec, B(r, {}), TransformKind::complete);
  EXPECT_EQ(strs(t.at("r/x").complete()), (SV{"x"}));
  EXPECT_EQ(strs(t.at("r/y").complete()), (SV{"y"}));
}

TEST(Transform, LengthZeroSequence) {
  auto r = R2();
  BlowUpSequence seq(Chart::affine_space(r));
  auto t = transform_sequence(seq, B(r, {"x", "x*y"}), TransformKind::complete);
  EXPECT_EQ(strs(t.at("r").complete()), (SV{"x", "x*y"}));
}

TEST(Transform, CompleteTransformIsNotAdditive) {
  auto r = R2();
  BlowUpSequence seq(Chart::affine_space(r));
  seq.blow_up_leaf("r", Center(I(r, {"x", "y"})));
  auto joint = transform_sequence(seq, B(r, {"x", "y"}), TransformKind::complete);
  auto a = transform_sequence(seq, B(r, {"x"}), TransformKind::complete);
  auto b = transform_sequence(seq, B(r, {"y"}), TransformKind::complete);
  for (const auto& id : seq.leaves())
    EXPECT_NE(strs(joint.at(id).complete()), strs(ordered_union(a.at(id).complete(), b.at(id).complete())));
}

TEST(Transform, ComponentwiseAndExceptionalDifference) {
  auto r = make_ring({"x", "y", "z"});
  BlowUpSequence seq(Chart::affine_space(r));
  seq.blow_up_leaf("r", Center(I(r, {"x", "y"})));
  seq.blow_up_leaf("r/x", Center(I(r, {"x", "z"})));
  auto b1 = B(r, {"x*z", "y^2"});
  auto b2 = B(r, {"x+y+z"});
  for (auto kind : {TransformKind::total, TransformKind::principal}) {
    auto j = transform_sequence(seq, ordered_union(b1, b2), kind);
    auto p = transform_sequence(seq, b1, kind);
    auto q = transform_sequence(seq, b2, kind);
    for (const auto& id : seq.leaves())
      EXPECT_EQ(strs(j.at(id).old_part), strs(ordered_union(p.at(id).old_part, q.at(id).old_part))) << id;
  }
  auto tot = transform_sequence(seq, b1, TransformKind::total);
  auto pr = transform_sequence(seq, b1, TransformKind::principal);
  auto exc = exceptional_locus(seq);
  for (const auto& id : seq.leaves())
    for (std::size_t i = 0; i < b1.size(); ++i) {
      auto d = tot.at(id).old_part[i].element.divide_exact(pr.at(id).old_part[i].element);
      ASSERT_TRUE(d) << id;
      // The quotient is a product of exceptional elements.
      Polynomial e = exc.at(id);
      Polynomial rest = *d;
      while (!rest.is_constant()) {
        auto g = poly_gcd(rest, e);
        ASSERT_FALSE(g.is_constant()) << id << " " << rest.to_string();
        rest = *rest.divide_exact(g);
      }
    }
}

TEST(Transform, PrincipalTransformModuloRelations) {
  auto r = R2();
  Ideal rel = I(r, {"y-x^2"});
  auto rec = blow_up(Chart::with_relations(rel), Center(I(r, {"x", "y"})));
  auto t = transform_record(rec, B(r, {"y"}, &rel), TransformKind::principal);
  for (const auto& c : rec.charts) {
    const auto& el = t.at(c.id).old_part[0];
    auto tot = total_transform(rec, I(r, {"y"})).at(c.id);
    EXPECT_TRUE((Ideal::principal(el.element * *c.exceptional) + c.relations).equals(tot)) << c.id;
  }
}
