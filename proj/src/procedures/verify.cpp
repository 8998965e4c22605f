#include <functional>

#include "bcalc/errors.hpp"
#include "common.hpp"

namespace bcalc {

using detail::make_flag;

Theorem parse_theorem(const std::string& s) {
  if (s == "divth") return Theorem::divth;
  if (s == "bth" || s == "Bth") return Theorem::bth;
  if (s == "princth") return Theorem::princth;
  fail(ErrorCode::invalid_argument, "unknown theorem '" + s + "'");
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::divth: return "divth";
    case Theorem::bth: return "bth";
    case Theorem::princth: return "princth";
  }
  return "?";
}

namespace {

// Runs `body` and turns engine errors into a false flag.
template <class F>
Flag guarded(const std::string& name, F body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::resource_limit) throw;
    return make_flag(name, false, e.what());
  }
}

Flag per_leaf(const BlowUpSequence& seq, const std::string& name,
              const std::function<bool(const std::string&)>& ok) {
  return guarded(name, [&] {
    for (const auto& leaf : seq.leaves())
      if (!ok(leaf)) return make_flag(name, false, "leaf " + leaf);
    return make_flag(name, true);
  });
}

}  // namespace

ResolutionReport verify_sequence_against_theorem(const BlowUpSequence& seq, const Boundary& b, Theorem theorem,
                                                 const std::optional<Ideal>& Z, const std::optional<Ideal>& bad_locus) {
  const Chart& root = seq.root();
  require_same_ring(root.ring, b.ring(), "verify");
  ResolutionReport rep;
  rep.sequence = seq;
  rep.flags.push_back(detail::normal_form_flag(seq));

  switch (theorem) {
    case Theorem::divth: {
      rep.flags.push_back(detail::centers_regular_flag(seq));
      auto complete = transform_sequence(seq, b, TransformKind::complete);
      auto total = transform_sequence(seq, b, TransformKind::total);
      rep.flags.push_back(per_leaf(seq, "complete-transform-snc", [&](const std::string& leaf) {
        return is_snc(seq.chart(leaf), complete.at(leaf).complete()).verdict;
      }));
      rep.flags.push_back(per_leaf(seq, "strict-transform-snc", [&](const std::string& leaf) {
        const Chart& c = seq.chart(leaf);
        Boundary strict(c.relations);
        for (std::size_t i = 0; i < b.size(); ++i) {
          auto s = strict_transform_sequence(seq, Ideal::principal(b[i].element) + root.relations).at(leaf);
          auto g = s.principal_generator();
          if (!g) return false;
          strict.push_back(b[i].id, *g);
        }
        return is_snc(c, strict).verdict;
      }));
      rep.flags.push_back(per_leaf(seq, "total-transform-strictly-monomial", [&](const std::string& leaf) {
        return is_strictly_monomial(seq.chart(leaf), total.at(leaf).complete()).verdict;
      }));
      Ideal sup = bad_locus ? *bad_locus + root.relations : root.relations + support(b);
      rep.flags.push_back(guarded("centers-supported", [&] { return detail::centers_over_flag(seq, sup, "centers-supported"); }));
      for (const auto& leaf : seq.leaves()) rep.final_boundary.emplace(leaf, complete.at(leaf).complete());
      break;
    }
    case Theorem::bth: {
      rep.flags.push_back(detail::centers_regular_flag(seq));
      auto complete = transform_sequence(seq, b, TransformKind::complete);
      rep.flags.push_back(per_leaf(seq, "semi-regular", [&](const std::string& leaf) {
        return semi_regular_locus(seq.chart(leaf), complete.at(leaf).complete()).verdict;
      }));
      rep.flags.push_back(guarded("centers-off-semi-regular-locus", [&] {
        Ideal bad = bad_locus ? *bad_locus + root.relations : semi_regular_locus(root, b).bad_locus;
        return detail::centers_over_flag(seq, bad, "centers-off-semi-regular-locus");
      }));
      for (const auto& leaf : seq.leaves()) rep.final_boundary.emplace(leaf, complete.at(leaf).complete());
      break;
    }
    case Theorem::princth: {
      if (!Z) fail(ErrorCode::invalid_argument, "princth needs the ideal Z");
      require_same_ring(root.ring, Z->ring(), "verify");
      rep.flags.push_back(per_leaf(seq, "regular", [&](const std::string& leaf) {
        return is_regular_scheme(seq.chart(leaf)).verdict;
      }));
      auto total = total_transform_sequence(seq, *Z);
      rep.flags.push_back(per_leaf(seq, "total-transform-strictly-monomial", [&](const std::string& leaf) {
        auto g = total.at(leaf).principal_generator();
        if (!g) return false;
        const Chart& c = seq.chart(leaf);
        Boundary zb(c.relations, {*g}, {"Z"});
        rep.final_boundary.emplace(leaf, zb);
        return is_strictly_monomial(c, zb).verdict;
      }));
      rep.flags.push_back(guarded("centers-over-Z-and-singular-locus", [&] {
        Ideal sing = is_regular_scheme(root).bad_locus;
        return detail::centers_over_flag(seq, ideal_product(*Z + root.relations, sing),
                                         "centers-over-Z-and-singular-locus");
      }));
      break;
    }
  }
  return rep;
}

}  // namespace bcalc
