#include "common.hpp"

namespace bcalc::detail {

Ideal pull_to_chart(const BlowUpSequence& seq, const std::string& id, const Ideal& root_ideal) {
  const Chart& c = seq.chart(id);
  return root_ideal.substitute(seq.map_to_root(id)) + c.relations;
}

bool center_regular(const Center& center) {
  for (const auto& comp : center.components()) {
    Chart c = Chart::with_relations(comp.ideal);
    if (!c.equidimensional) return false;
    if (!is_regular_scheme(c).verdict) return false;
  }
  return true;
}

bool center_over(const Center& center, const Ideal& J) { return vanishes_on(J, center.ideal()); }

Flag make_flag(std::string name, bool value, std::string detail) {
  Flag f;
  f.name = std::move(name);
  f.value = value;
  f.detail = std::move(detail);
  return f;
}

Flag centers_regular_flag(const BlowUpSequence& seq) {
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const auto& rec = seq.records()[k];
    if (!center_regular(rec.center))
      return make_flag("centers-regular", false,
                       "record " + std::to_string(k + 1) + " center " + rec.center.ideal().to_string());
  }
  return make_flag("centers-regular", true);
}

Flag centers_over_flag(const BlowUpSequence& seq, const Ideal& support_root, const std::string& name) {
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const auto& rec = seq.records()[k];
    if (rec.center.is_empty()) continue;
    Ideal J = pull_to_chart(seq, rec.source, support_root);
    if (!center_over(rec.center, J))
      return make_flag(name, false, "record " + std::to_string(k + 1) + " center " + rec.center.ideal().to_string());
  }
  return make_flag(name, true);
}

Flag normal_form_flag(const BlowUpSequence& seq) {
  for (std::size_t k = 0; k < seq.size(); ++k)
    if (seq.records()[k].center.is_empty())
      return make_flag("normal-form", false, "record " + std::to_string(k + 1) + " has an empty center");
  return make_flag("normal-form", true);
}

}  // namespace bcalc::detail

namespace bcalc {

bool ResolutionReport::verdict() const {
  for (const auto& f : flags)
    if (!f.value) return false;
  return true;
}

const Flag* ResolutionReport::flag(const std::string& name) const {
  for (const auto& f : flags)
    if (f.name == name) return &f;
  return nullptr;
}

void graft(BlowUpSequence& seq, const BlowUpSequence& sub) {
  for (const auto& rec : sub.records()) seq.append(rec);
}

}  // namespace bcalc

namespace bcalc::detail {

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
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

}  // namespace bcalc::detail
