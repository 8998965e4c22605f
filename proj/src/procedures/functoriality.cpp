#include "bcalc/errors.hpp"
#include "common.hpp"

namespace bcalc {

RegularMorphism fresh_variable_extension(const RingPtr& ring, const std::string& name) {
  if (ring->index_of(name)) fail(ErrorCode::invalid_argument, "variable " + name + " already exists");
  std::vector<std::string> names = ring->names();
  names.push_back(name);
  RegularMorphism g;
  g.target = make_ring(names);
  for (std::size_t i = 0; i < ring->size(); ++i) g.images.push_back(Polynomial::variable(g.target, i));
  return g;
}

RegularMorphism diagonal_change(const RingPtr& ring, const std::vector<Rational>& scale) {
  if (scale.size() != ring->size()) fail(ErrorCode::invalid_argument, "one scale factor per variable expected");
  RegularMorphism g;
  g.target = ring;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (scale[i] == 0) fail(ErrorCode::invalid_argument, "scale factors must be nonzero");
    Polynomial v = Polynomial::variable(ring, i);
    v *= scale[i];
    g.images.push_back(v);
  }
  return g;
}

BlowUpSequence pullback_sequence(const BlowUpSequence& seq, const RegularMorphism& g) {
  const Chart& xroot = seq.root();
  if (g.images.size() != xroot.ring->size()) fail(ErrorCode::invalid_argument, "morphism arity does not match");
  Chart yroot = Chart::with_relations(xroot.relations.substitute(g.images), xroot.id);
  BlowUpSequence out(yroot);
  // Per X chart: images of its variables on the matching Y chart.
  std::map<std::string, std::vector<Polynomial>> gmap;
  std::map<std::string, std::string> ids;
  gmap[xroot.id] = g.images;
  ids[xroot.id] = xroot.id;
  for (const auto& rec : seq.records()) {
    const std::vector<Polynomial>& gs = gmap.at(rec.source);
    const std::string& ysrc = ids.at(rec.source);
    const Chart& yc = out.chart(ysrc);
    Center pulled;
    if (rec.center.is_empty()) {
      pulled = Center(Ideal::unit(yc.ring));
    } else {
      std::vector<CenterComponent> comps;
      for (const auto& comp : rec.center.components()) {
        Ideal J = comp.ideal.substitute(gs) + yc.relations;
        if (J.is_unit()) fail(ErrorCode::invalid_argument, "center component pulls back to the empty set");
        comps.push_back({J, std::nullopt});
      }
      Ideal whole = rec.center.ideal().substitute(gs) + yc.relations;
      pulled = rec.center.components_declared() ? Center(whole, comps) : Center(whole);
      if (pulled.components().size() != comps.size())
        fail(ErrorCode::invalid_argument, "center decomposition changes under the morphism");
    }
    const BlowUpRecord& yrec = out.blow_up_leaf(ysrc, pulled);
    if (yrec.charts.size() != rec.charts.size())
      fail(ErrorCode::verification_failure, "pulled-back blow-up has a different chart count");
    for (std::size_t k = 0; k < rec.charts.size(); ++k) {
      const Chart& xc = rec.charts[k];
      const Chart& ych = yrec.charts[k];
      ids[xc.id] = ych.id;
      std::vector<Polynomial> cur;
      for (const auto& p : gs) cur.push_back(p.substitute(ych.parent->images));
      for (const auto& st : xc.parent->inverse) {
        std::vector<Polynomial> nxt;
        for (std::size_t i = 0; i < cur.size(); ++i) {
          Polynomial num = st.num[i].substitute(cur);
          Polynomial den = st.den[i].substitute(cur);
          auto q = num.divide_exact(den);
          if (!q) fail(ErrorCode::verification_failure, "morphism does not lift to chart " + ych.id);
          nxt.push_back(*q);
        }
        cur = std::move(nxt);
      }
      gmap[xc.id] = std::move(cur);
    }
  }
  return omit_empty_blowups(out);
}

bool same_sequence(const BlowUpSequence& a, const BlowUpSequence& b, std::string* why) {
  auto no = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!same_ring(a.root().ring, b.root().ring)) return no("different rings");
  if (a.size() != b.size()) return no("record counts " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& ra = a.records()[k];
    const auto& rb = b.records()[k];
    std::string at = "record " + std::to_string(k + 1) + ": ";
    if (ra.source != rb.source) return no(at + "sources " + ra.source + " and " + rb.source);
    if (ra.charts.size() != rb.charts.size()) return no(at + "chart counts differ");
    for (std::size_t i = 0; i < ra.charts.size(); ++i)
      if (ra.charts[i].id != rb.charts[i].id) return no(at + "charts " + ra.charts[i].id + " and " + rb.charts[i].id);
    if (!ra.center.ideal().equals(rb.center.ideal()))
      return no(at + "centers " + ra.center.ideal().to_string() + " and " + rb.center.ideal().to_string());
    const auto& ca = ra.center.components();
    const auto& cb = rb.center.components();
    if (ca.size() != cb.size()) return no(at + "component counts differ");
    for (std::size_t i = 0; i < ca.size(); ++i)
      if (!ca[i].ideal.equals(cb[i].ideal)) return no(at + "component " + std::to_string(i) + " differs");
  }
  if (why) why->clear();
  return true;
}

}  // namespace bcalc
