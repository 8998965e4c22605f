#include "bcalc/chart/chart.hpp"

#include <algorithm>

#include "bcalc/errors.hpp"

namespace bcalc {

std::optional<std::vector<std::vector<Rational>>> invert_matrix(const std::vector<std::vector<Rational>>& a);

namespace {

std::vector<Polynomial> identity_images(const RingPtr& r) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < r->size(); ++i) v.push_back(Polynomial::variable(r, i));
  return v;
}

InverseStep identity_inverse(const RingPtr& r) {
  InverseStep s;
  s.num = identity_images(r);
  s.den.assign(r->size(), Polynomial::constant(r, 1));
  return s;
}

// One blow-up step of a single component inside one chart.
struct Step {
  Chart chart;
  Polynomial exc;
  std::string token;
  InverseStep inverse;
  std::vector<Polynomial> images;
};

Chart child_of(const Chart& c, const std::vector<Polynomial>& images, const Polynomial& exc) {
  Chart ch;
  ch.ring = c.ring;
  std::vector<Polynomial> rel;
  for (const auto& g : c.relations.generators()) rel.push_back(g.substitute(images));
  Ideal total(c.ring, rel);
  ch.relations = rel.empty() ? total : saturation(total, exc);
  if (!ch.relations.is_zero()) ch.relations = Ideal(c.ring, ch.relations.groebner());
  ch.equidimensional = c.equidimensional;
  return ch;
}

std::vector<Step> coordinate_steps(const Chart& c, const Frame& frame, const std::vector<std::size_t>& vars,
                                   const std::optional<MonomialCenterShape>& mono) {
  const RingPtr& r = c.ring;
  std::size_t n = r->size();
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& u : frame.coords) {
    auto f = affine_form(u);
    a.push_back(f->linear);
    b.push_back(f->constant);
  }
  auto ainv = invert_matrix(a);
  if (!ainv) fail(ErrorCode::center_not_coordinate, "frame is not invertible");
  std::vector<Step> out;
  for (std::size_t j : vars) {
    std::vector<Polynomial> U;
    for (std::size_t k = 0; k < n; ++k) {
      bool scaled = k != j && std::find(vars.begin(), vars.end(), k) != vars.end();
      Polynomial xk = Polynomial::variable(r, k);
      U.push_back(scaled ? Polynomial::variable(r, j) * xk : xk);
    }
    std::vector<Polynomial> images;
    for (std::size_t m = 0; m < n; ++m) {
      Polynomial im(r);
      for (std::size_t k = 0; k < n; ++k)
        if ((*ainv)[m][k] != 0) im += (U[k] - Polynomial::constant(r, b[k])) * (*ainv)[m][k];
      images.push_back(im);
    }
    InverseStep inv;
    for (std::size_t k = 0; k < n; ++k) {
      bool scaled = k != j && std::find(vars.begin(), vars.end(), k) != vars.end();
      inv.num.push_back(frame.coords[k]);
      inv.den.push_back(scaled ? frame.coords[j] : Polynomial::constant(r, 1));
    }
    Polynomial exc = Polynomial::variable(r, j);
    if (mono) exc = mono->factor.substitute(images) * exc.pow(mono->power);
    Step s{child_of(c, images, exc), exc, r->name(j), std::move(inv), std::move(images)};
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Step> principal_step(const Chart& c, const Polynomial& h) {
  Step s{child_of(c, identity_images(c.ring), h), h, "E", identity_inverse(c.ring), identity_images(c.ring)};
  return {std::move(s)};
}

std::vector<Step> blow_up_component(const Chart& c, const Ideal& J, const std::optional<Frame>& frame) {
  if (frame) {
    auto vars = frame_coordinates(*frame, J);
    if (vars.size() == 1) return principal_step(c, frame->coords[vars[0]]);
    return coordinate_steps(c, *frame, vars, std::nullopt);
  }
  if (is_linear_ideal(J)) {
    std::vector<std::size_t> vars;
    Frame f = auto_frame(J, vars);
    if (vars.size() == 1) return principal_step(c, f.coords[vars[0]]);
    return coordinate_steps(c, f, vars, std::nullopt);
  }
  if (auto shape = monomial_center_shape(J); shape && shape->power > 0 && shape->vars.size() > 1) {
    Frame id;
    id.coords = identity_images(c.ring);
    return coordinate_steps(c, id, shape->vars, shape);
  }
  if (auto g = J.principal_generator()) return principal_step(c, g->primitive());
  fail(ErrorCode::center_not_coordinate,
       "center " + J.to_string() + " is neither coordinate in a frame, principal, nor of the form m*<x_S>^k");
}

struct Work {
  Chart chart;
  std::vector<Polynomial> images;
  std::vector<InverseStep> inverse;
  std::vector<std::optional<Polynomial>> comp_exc;
  bool touched = false;
};

}  // namespace

Chart Chart::affine_space(RingPtr ring, std::string id) {
  Chart c;
  c.id = std::move(id);
  c.relations = Ideal::zero(ring);
  c.ring = std::move(ring);
  return c;
}

Chart Chart::with_relations(Ideal relations, std::string id) {
  Chart c;
  c.id = std::move(id);
  c.ring = relations.ring();
  c.equidimensional = detect_equidimensional(relations);
  c.relations = std::move(relations);
  return c;
}

std::size_t Chart::dimension() const {
  int d = bcalc::dimension(relations);
  return d < 0 ? 0 : static_cast<std::size_t>(d);
}

bool detect_equidimensional(const Ideal& rel) {
  if (rel.is_zero() || rel.is_unit()) return true;
  if (rel.principal_generator()) return true;
  int codim = static_cast<int>(rel.ring()->size()) - dimension(rel);
  return static_cast<int>(rel.generators().size()) == codim || static_cast<int>(rel.groebner().size()) == codim;
}

std::size_t BlowUpRecord::chart_index(const std::string& id) const {
  for (std::size_t i = 0; i < charts.size(); ++i)
    if (charts[i].id == id) return i;
  fail(ErrorCode::unknown_source_chart, "chart " + id + " not produced by this record");
}

BlowUpRecord blow_up(const Chart& chart, const Center& center) {
  require_same_ring(chart.ring, center.ring(), "blow_up center");
  if (!center.ideal().contains(chart.relations))
    fail(ErrorCode::center_not_contained,
         "center " + center.ideal().to_string() + " does not contain relations " + chart.relations.to_string());
  BlowUpRecord rec;
  rec.source = chart.id;
  rec.center = center;
  const RingPtr& r = chart.ring;
  if (center.is_empty()) {
    Chart c = chart;
    c.id = chart.id + "/0";
    c.parent = ChartMap{chart.id, identity_images(r), {identity_inverse(r)}};
    c.exceptional = Polynomial::constant(r, 1);
    c.pieces.clear();
    rec.charts.push_back(std::move(c));
    rec.component_exceptional.emplace_back();
    return rec;
  }
  const auto& comps = center.components();
  bool multi = comps.size() > 1;
  std::vector<Work> work;
  work.push_back({chart, identity_images(r), {}, std::vector<std::optional<Polynomial>>(comps.size()), false});
  for (std::size_t a = 0; a < comps.size(); ++a) {
    std::vector<Work> next;
    for (auto& w : work) {
      std::vector<Polynomial> gens;
      for (const auto& g : comps[a].ideal.generators()) gens.push_back(g.substitute(w.images));
      Ideal J = Ideal(r, gens) + w.chart.relations;
      if (J.is_unit()) {
        next.push_back(std::move(w));
        continue;
      }
      std::optional<Frame> frame = w.touched ? std::nullopt : comps[a].frame;
      for (auto& s : blow_up_component(w.chart, J, frame)) {
        Work nw;
        nw.chart = std::move(s.chart);
        nw.chart.id = w.chart.id + "/" + (multi ? std::to_string(a) + ":" : "") + s.token;
        for (const auto& im : w.images) nw.images.push_back(im.substitute(s.images));
        nw.inverse = w.inverse;
        nw.inverse.push_back(s.inverse);
        for (const auto& e : w.comp_exc) nw.comp_exc.push_back(e ? std::optional(e->substitute(s.images)) : std::nullopt);
        nw.comp_exc[a] = s.exc;
        nw.touched = true;
        next.push_back(std::move(nw));
      }
    }
    work = std::move(next);
  }
  for (auto& w : work) {
    Chart c = std::move(w.chart);
    c.parent = ChartMap{chart.id, std::move(w.images), std::move(w.inverse)};
    Polynomial e = Polynomial::constant(r, 1);
    for (const auto& x : w.comp_exc)
      if (x) e *= *x;
    c.exceptional = e;
    c.pieces.clear();
    rec.charts.push_back(std::move(c));
    rec.component_exceptional.push_back(std::move(w.comp_exc));
  }
  return rec;
}

BlowUpSequence::BlowUpSequence(Chart root) {
  index_[root.id] = 0;
  charts_.push_back(std::move(root));
}

bool BlowUpSequence::has_chart(const std::string& id) const { return index_.count(id) > 0; }

const Chart& BlowUpSequence::chart(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail(ErrorCode::unknown_source_chart, "no chart '" + id + "' in the forest");
  return charts_[it->second];
}

bool BlowUpSequence::is_leaf(const std::string& id) const {
  if (!has_chart(id)) return false;
  for (const auto& r : records_)
    if (r.source == id) return false;
  return true;
}

std::vector<std::string> BlowUpSequence::leaves() const {
  std::vector<std::string> out;
  for (const auto& c : charts_)
    if (is_leaf(c.id)) out.push_back(c.id);
  return out;
}

void BlowUpSequence::append(BlowUpRecord record) {
  if (!has_chart(record.source))
    fail(ErrorCode::unknown_source_chart, "record source '" + record.source + "' not in the forest");
  if (!is_leaf(record.source))
    fail(ErrorCode::unknown_source_chart, "record source '" + record.source + "' is not a leaf");
  for (const auto& c : record.charts) {
    if (has_chart(c.id)) fail(ErrorCode::invalid_argument, "duplicate chart id '" + c.id + "'");
  }
  std::size_t ri = records_.size();
  for (const auto& c : record.charts) {
    index_[c.id] = charts_.size();
    producer_[c.id] = ri;
    charts_.push_back(c);
  }
  records_.push_back(std::move(record));
}

const BlowUpRecord& BlowUpSequence::blow_up_leaf(const std::string& id, const Center& center) {
  if (!is_leaf(id)) fail(ErrorCode::unknown_source_chart, "chart '" + id + "' is not a leaf");
  append(blow_up(chart(id), center));
  return records_.back();
}

std::optional<std::size_t> BlowUpSequence::producing_record(const std::string& id) const {
  auto it = producer_.find(id);
  if (it == producer_.end()) return std::nullopt;
  return it->second;
}

std::vector<Polynomial> BlowUpSequence::map_to_root(const std::string& id) const {
  const Chart& c = chart(id);
  if (!c.parent || id == root().id) return identity_images(c.ring);
  std::vector<Polynomial> up = map_to_root(c.parent->parent_id);
  std::vector<Polynomial> out;
  for (const auto& p : up) out.push_back(p.substitute(c.parent->images));
  return out;
}

BlowUpSequence compose_sequence(const BlowUpSequence& seq, const BlowUpRecord& record) {
  BlowUpSequence out = seq;
  out.append(record);
  return out;
}

std::map<std::string, Ideal> total_transform(const BlowUpRecord& record, const Ideal& Z) {
  std::map<std::string, Ideal> out;
  for (const auto& c : record.charts) {
    require_same_ring(c.ring, Z.ring(), "total_transform");
    out.emplace(c.id, Z.substitute(c.parent->images) + c.relations);
  }
  return out;
}

std::map<std::string, Ideal> strict_transform(const BlowUpRecord& record, const Ideal& Z) {
  std::map<std::string, Ideal> out;
  for (const auto& [id, tot] : total_transform(record, Z)) {
    const Chart& c = record.charts[record.chart_index(id)];
    out.emplace(id, saturation(tot, *c.exceptional));
  }
  return out;
}

std::map<std::string, Ideal> strict_transform_sequence(const BlowUpSequence& seq, const Ideal& Z) {
  std::map<std::string, Ideal> out;
  out.emplace(seq.root().id, Z + seq.root().relations);
  for (const auto& rec : seq.records()) {
    const Ideal& src = out.at(rec.source);
    for (auto& [id, I] : strict_transform(rec, src)) out.emplace(id, I);
  }
  return out;
}

std::map<std::string, Ideal> total_transform_sequence(const BlowUpSequence& seq, const Ideal& Z) {
  std::map<std::string, Ideal> out;
  out.emplace(seq.root().id, Z + seq.root().relations);
  for (const auto& rec : seq.records()) {
    const Ideal& src = out.at(rec.source);
    for (auto& [id, I] : total_transform(rec, src)) out.emplace(id, I);
  }
  return out;
}

namespace {

void require_same_ids(const BlowUpRecord& a, const BlowUpRecord& b) {
  bool same = a.charts.size() == b.charts.size();
  for (std::size_t i = 0; same && i < a.charts.size(); ++i) same = a.charts[i].id == b.charts[i].id;
  if (!same) fail(ErrorCode::verification_failure, "replayed blow-up of " + a.source + " produced other charts");
}

}  // namespace

BlowUpSequence restrict_sequence(const BlowUpSequence& seq, const Ideal& Z) {
  const Chart& root = seq.root();
  require_same_ring(root.ring, Z.ring(), "restrict_sequence");
  Ideal rel = Z + root.relations;
  Chart r0 = Chart::with_relations(Ideal(root.ring, rel.groebner()), root.id);
  BlowUpSequence out(r0);
  for (const auto& rec : seq.records()) {
    const Chart& src = out.chart(rec.source);
    if (!rec.center.ideal().contains(src.relations))
      fail(ErrorCode::center_not_in_strict_transform,
           "center " + rec.center.ideal().to_string() + " is not inside the strict transform at " + rec.source);
    BlowUpRecord nr = blow_up(src, rec.center);
    require_same_ids(rec, nr);
    out.append(std::move(nr));
  }
  return out;
}

BlowUpSequence push_forward_sequence(const BlowUpSequence& seq, const Chart& ambient) {
  const Chart& root = seq.root();
  require_same_ring(root.ring, ambient.ring, "push_forward_sequence");
  if (!root.relations.contains(ambient.relations))
    fail(ErrorCode::invalid_argument, "subscheme root is not inside the ambient chart");
  Chart a = ambient;
  a.id = root.id;
  a.parent.reset();
  BlowUpSequence out(a);
  for (const auto& rec : seq.records()) {
    BlowUpRecord nr = blow_up(out.chart(rec.source), rec.center);
    require_same_ids(rec, nr);
    out.append(std::move(nr));
  }
  return out;
}

BlowUpSequence omit_empty_blowups(const BlowUpSequence& seq) {
  std::map<std::string, std::string> rename;
  rename[seq.root().id] = seq.root().id;
  BlowUpSequence out(seq.root());
  for (const auto& rec : seq.records()) {
    const std::string& src = rename.at(rec.source);
    if (rec.center.is_empty()) {
      rename[rec.charts[0].id] = src;
      continue;
    }
    BlowUpRecord nr = blow_up(out.chart(src), rec.center);
    for (std::size_t i = 0; i < rec.charts.size(); ++i) rename[rec.charts[i].id] = nr.charts.at(i).id;
    out.append(std::move(nr));
  }
  return out;
}

bool check_inverse_on_grid(const Chart& chart, int radius, std::size_t max_points) {
  if (!chart.parent) return true;
  std::size_t n = chart.ring->size();
  std::vector<int> q(n, -radius);
  std::size_t checked = 0;
  for (;;) {
    std::vector<Rational> Q(q.begin(), q.end());
    bool usable = !chart.exceptional || chart.exceptional->evaluate(Q) != 0;
    if (usable) {
      std::vector<Rational> P;
      for (const auto& im : chart.parent->images) P.push_back(im.evaluate(Q));
      std::vector<Rational> cur = P;
      for (const auto& st : chart.parent->inverse) {
        std::vector<Rational> nxt;
        for (std::size_t k = 0; k < n && usable; ++k) {
          Rational d = st.den[k].evaluate(cur);
          if (d == 0) usable = false;
          else nxt.push_back(st.num[k].evaluate(cur) / d);
        }
        if (!usable) break;
        cur = std::move(nxt);
      }
      if (usable) {
        if (cur != Q) return false;
        if (++checked >= max_points) return true;
      }
    }
    std::size_t k = 0;
    while (k < n && q[k] == radius) q[k++] = -radius;
    if (k == n) break;
    ++q[k];
  }
  return checked > 0;
}

}  // namespace bcalc
