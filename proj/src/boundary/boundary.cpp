#include "bcalc/boundary/boundary.hpp"

#include <sstream>

#include "bcalc/errors.hpp"
#include "bcalc/limits.hpp"
#include "bcalc/poly/factor.hpp"
#include "bcalc/poly/groebner.hpp"

namespace bcalc {

Polynomial normalize_element(const Polynomial& f, const Ideal& relations) {
  Polynomial g = relations.is_zero() ? f : relations.reduce(f);
  return g.primitive();
}

Boundary::Boundary(Ideal relations, std::vector<Polynomial> elements, std::vector<std::string> ids)
    : relations_(std::move(relations)) {
  if (!ids.empty() && ids.size() != elements.size())
    fail(ErrorCode::invalid_argument, "boundary ids and elements differ in length");
  for (std::size_t i = 0; i < elements.size(); ++i)
    push_back(ids.empty() ? "B" + std::to_string(i + 1) : ids[i], elements[i]);
}

void Boundary::push_back(std::string id, const Polynomial& element) {
  require_same_ring(ring(), element.ring(), "boundary component");
  BoundaryComponent c;
  c.id = std::move(id);
  c.element = normalize_element(element, relations_);
  c.empty = c.element.is_unit() || (relations_ + c.element).is_unit();
  comps_.push_back(std::move(c));
}

std::vector<Polynomial> Boundary::elements() const {
  std::vector<Polynomial> v;
  for (const auto& c : comps_) v.push_back(c.element);
  return v;
}

std::string Boundary::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) os << ", ";
    os << comps_[i].id << ": " << (comps_[i].empty ? "(empty) " : "") << comps_[i].element.to_string();
  }
  os << "}";
  return os.str();
}

Boundary reduced_form(const Boundary& b) {
  Boundary out(b.relations());
  for (const auto& c : b.components())
    if (!c.empty) out.push_back(c.id, c.element);
  return out;
}

Boundary ordered_union(const Boundary& a, const Boundary& b) {
  require_same_ring(a.ring(), b.ring(), "ordered_union");
  if (!a.relations().equals(b.relations())) fail(ErrorCode::ring_mismatch, "boundaries live on different charts");
  Boundary out = a;
  for (const auto& c : b.components()) out.push_back(c.id, c.element);
  return out;
}

Polynomial schematic_support(const Boundary& b) {
  Polynomial p = Polynomial::constant(b.ring(), 1);
  for (const auto& c : b.components()) p *= c.element;
  return p;
}

Polynomial support(const Boundary& b) {
  Polynomial p = Polynomial::constant(b.ring(), 1);
  for (const auto& c : b.components()) {
    if (c.element.is_zero()) return c.element;
    if (!c.element.is_constant()) p *= c.element;
  }
  if (p.is_constant()) return p;
  return squarefree_part(p);
}

StratumQuery stratum(const Boundary& b, const std::vector<std::size_t>& J) {
  StratumQuery q;
  q.J = J;
  std::vector<Polynomial> gens = b.relations().generators();
  std::vector<bool> in(b.size(), false);
  for (std::size_t j : J) {
    if (j >= b.size()) fail(ErrorCode::invalid_argument, "stratum index out of range");
    in[j] = true;
    gens.push_back(b[j].element);
  }
  q.closure = Ideal(b.ring(), gens);
  Polynomial prod = Polynomial::constant(b.ring(), 1);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!in[i]) {
      q.removed.push_back(b[i].element);
      prod *= b[i].element;
    }
  q.dimension = dimension(q.closure);
  q.nonempty = q.dimension >= 0 && !radical_contains(q.closure, prod);
  return q;
}

Boundary pullback_boundary(const Boundary& b, const std::vector<Polynomial>& images, const Ideal& target_relations) {
  Boundary out(target_relations);
  for (const auto& c : b.components()) out.push_back(c.id, c.element.substitute(images));
  return out;
}

Boundary restrict_boundary(const Boundary& b, const Ideal& Z) {
  require_same_ring(b.ring(), Z.ring(), "restrict_boundary");
  Ideal rel = Z + b.relations();
  rel = Ideal(rel.ring(), rel.groebner());
  Boundary out(rel);
  for (const auto& c : b.components()) out.push_back(c.id, c.element);
  return out;
}

TransformKind parse_transform_kind(const std::string& s) {
  if (s == "total") return TransformKind::total;
  if (s == "principal") return TransformKind::principal;
  if (s == "maximal") return TransformKind::maximal;
  if (s == "complete") return TransformKind::complete;
  fail(ErrorCode::invalid_argument, "unknown transform kind '" + s + "'");
}

std::string transform_kind_name(TransformKind k) {
  switch (k) {
    case TransformKind::total: return "total";
    case TransformKind::principal: return "principal";
    case TransformKind::maximal: return "maximal";
    case TransformKind::complete: return "complete";
  }
  return "?";
}

namespace {

// q with f = q*e modulo rel, rel saturated by e.
std::optional<Polynomial> divide_mod(const Polynomial& f, const Polynomial& e, const Ideal& rel) {
  if (auto q = f.divide_exact(e)) return rel.is_zero() ? *q : rel.reduce(*q);
  if (rel.is_zero()) return std::nullopt;
  std::vector<Polynomial> gens{e};
  for (const auto& g : rel.groebner()) gens.push_back(g);
  auto cof = lift(f, gens);
  if (!cof) return std::nullopt;
  return rel.reduce((*cof)[0]);
}

std::size_t max_power(Polynomial f, const Polynomial& e, const Ideal& rel) {
  std::size_t n = 0;
  while (auto q = divide_mod(f, e, rel)) {
    f = *q;
    if (++n > limits().max_degree) fail(ErrorCode::resource_limit, "exceptional power exceeds degree cap");
  }
  return n;
}

}  // namespace

std::map<std::string, Polynomial> transform_element(const BlowUpRecord& rec, const Polynomial& b, TransformKind kind,
                                                    std::map<std::string, std::string>* provenance) {
  const auto& comps = rec.center.components();
  std::vector<bool> inside(comps.size(), false);
  if (kind != TransformKind::total)
    for (std::size_t a = 0; a < comps.size(); ++a) inside[a] = comps[a].ideal.contains(b);
  std::vector<Polynomial> pulled;
  for (const auto& c : rec.charts) {
    Polynomial p = b.substitute(c.parent->images);
    pulled.push_back(c.relations.is_zero() ? p : c.relations.reduce(p));
  }
  std::vector<std::size_t> power(comps.size(), 0);
  if (kind == TransformKind::maximal) {
    for (std::size_t a = 0; a < comps.size(); ++a) {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < rec.charts.size(); ++i) {
        const auto& e = rec.component_exceptional[i][a];
        if (!e || pulled[i].is_zero()) continue;
        std::size_t n = max_power(pulled[i], *e, rec.charts[i].relations);
        if (!best || n < *best) best = n;
      }
      power[a] = best.value_or(0);
    }
  } else {
    for (std::size_t a = 0; a < comps.size(); ++a) power[a] = inside[a] ? 1 : 0;
  }
  std::map<std::string, Polynomial> out;
  for (std::size_t i = 0; i < rec.charts.size(); ++i) {
    const Chart& c = rec.charts[i];
    Polynomial p = pulled[i];
    std::string tag;
    for (std::size_t a = 0; a < comps.size(); ++a) {
      if (power[a] == 0) continue;
      tag += (tag.empty() ? "" : ",") + std::to_string(a) +
             (kind == TransformKind::maximal ? "^" + std::to_string(power[a]) : "");
      const auto& e = rec.component_exceptional[i][a];
      if (!e || p.is_zero()) continue;
      for (std::size_t k = 0; k < power[a]; ++k) {
        auto q = divide_mod(p, *e, c.relations);
        if (!q)
          fail(ErrorCode::verification_failure,
               "exceptional element " + e->to_string() + " does not divide " + p.to_string() + " in chart " + c.id);
        p = *q;
      }
    }
    out.emplace(c.id, normalize_element(p, c.relations));
    if (provenance) {
      std::string kindtag = kind == TransformKind::maximal ? "maximal:" : "subtract:";
      (*provenance)[c.id] = tag.empty() ? "pullback" : kindtag + tag;
    }
  }
  return out;
}

std::map<std::string, TransformedBoundary> transform_record(const BlowUpRecord& rec, const Boundary& b,
                                                            TransformKind kind, const std::string& exceptional_id) {
  std::map<std::string, TransformedBoundary> out;
  for (const auto& c : rec.charts) {
    TransformedBoundary t;
    t.old_part = Boundary(c.relations);
    t.new_part = Boundary(c.relations);
    out.emplace(c.id, std::move(t));
  }
  for (const auto& comp : b.components()) {
    std::map<std::string, std::string> prov;
    auto images = transform_element(rec, comp.element, kind, &prov);
    for (auto& [id, t] : out) {
      t.old_part.push_back(comp.id, images.at(id));
      t.provenance.push_back(prov.at(id));
    }
  }
  for (const auto& c : rec.charts) out.at(c.id).new_part.push_back(exceptional_id, *c.exceptional);
  return out;
}

std::map<std::string, TransformedBoundary> transform_sequence(const BlowUpSequence& seq, const Boundary& b,
                                                              TransformKind kind) {
  require_same_ring(seq.root().ring, b.ring(), "transform_sequence");
  std::map<std::string, Boundary> state;
  std::map<std::string, std::vector<std::string>> prov;
  state.emplace(seq.root().id, b);
  prov[seq.root().id].assign(b.size(), "pullback");
  std::size_t k = 0;
  for (const auto& rec : seq.records()) {
    std::string eid = "E" + std::to_string(++k);
    Boundary src = state.at(rec.source);
    std::vector<std::string> src_prov = prov.at(rec.source);
    state.erase(rec.source);
    prov.erase(rec.source);
    for (auto& [id, s] : state) s.push_back(eid, Polynomial::constant(s.ring(), 1));
    for (auto& [id, t] : transform_record(rec, src, kind, eid)) {
      std::vector<std::string> p = src_prov;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const std::string& now = t.provenance[i];
        if (now != "pullback") p[i] = p[i] == "pullback" ? now : p[i] + ";" + now;
      }
      state.emplace(id, t.complete());
      prov.emplace(id, std::move(p));
    }
  }
  std::map<std::string, TransformedBoundary> out;
  for (auto& [id, s] : state) {
    TransformedBoundary t;
    t.old_part = Boundary(s.relations());
    t.new_part = Boundary(s.relations());
    for (std::size_t i = 0; i < s.size(); ++i)
      (i < b.size() ? t.old_part : t.new_part).push_back(s[i].id, s[i].element);
    t.provenance = prov.at(id);
    out.emplace(id, std::move(t));
  }
  return out;
}

std::map<std::string, Polynomial> exceptional_locus(const BlowUpSequence& seq) {
  std::map<std::string, Polynomial> out;
  for (const auto& [id, t] : transform_sequence(seq, Boundary(seq.root().relations), TransformKind::total))
    out.emplace(id, schematic_support(t.new_part));
  return out;
}

}  // namespace bcalc
