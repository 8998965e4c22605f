#include "bcalc/io/scene.hpp"

#include <fstream>
#include <sstream>

#include "bcalc/errors.hpp"

namespace bcalc {

namespace {

struct Ctx {
  const std::string& text;
  std::string source;

  std::string at(std::size_t byte) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return source + ":" + std::to_string(line) + ":" + std::to_string(col);
  }

  // Position of the first literal occurrence of a JSON string value.
  std::string where(const std::string& literal) const {
    std::string quoted = Json(literal).dump();
    std::size_t p = text.find(quoted);
    return p == std::string::npos ? source : at(p);
  }

  [[noreturn]] void error(const std::string& literal, const std::string& msg) const {
    fail(ErrorCode::parse, where(literal) + ": " + msg);
  }
};

const Json* member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

Polynomial poly(const Ctx& ctx, const RingPtr& ring, const Json& v, const std::string& key) {
  if (!v.is_string()) ctx.error(key, "'" + key + "' expects polynomial strings");
  const std::string& s = v.get_ref<const std::string&>();
  try {
    return parse_polynomial(ring, s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::parse) throw;
    ctx.error(s, e.what());
  }
}

std::vector<Polynomial> poly_list(const Ctx& ctx, const RingPtr& ring, const Json& v, const std::string& key) {
  if (!v.is_array()) ctx.error(key, "'" + key + "' expects an array of polynomial strings");
  std::vector<Polynomial> out;
  for (const auto& e : v) out.push_back(poly(ctx, ring, e, key));
  return out;
}

Ideal ideal_of(const Ctx& ctx, const RingPtr& ring, const Json& v, const std::string& key) {
  return Ideal(ring, poly_list(ctx, ring, v, key));
}

RingPtr ring_of(const Ctx& ctx, const Json& v) {
  if (!v.is_array() || v.empty()) ctx.error("ring", "'ring' expects a nonempty array of variable names");
  std::vector<std::string> names;
  for (const auto& n : v) {
    if (!n.is_string()) ctx.error("ring", "variable names must be strings");
    names.push_back(n.get<std::string>());
  }
  try {
    return make_ring(names);
  } catch (const Error& e) {
    ctx.error("ring", e.what());
  }
}

Center center_of(const Ctx& ctx, const RingPtr& ring, const Json& v) {
  if (v.is_array()) return Center(ideal_of(ctx, ring, v, "center"));
  if (!v.is_object() || !member(v, "ideal")) ctx.error("center", "'center' expects generators or an object with 'ideal'");
  Ideal whole = ideal_of(ctx, ring, v["ideal"], "ideal");
  bool declared = v.value("declared", member(v, "components") != nullptr);
  if (const Json* f = member(v, "frame")) return Center::with_frame(whole, Frame{poly_list(ctx, ring, *f, "frame")});
  const Json* comps = member(v, "components");
  if (!declared || !comps) {
    Center c(whole);
    if (comps && comps->size() != c.components().size())
      ctx.error("components", "recorded component count does not match the detected one");
    return c;
  }
  if (!comps->is_array()) ctx.error("components", "'components' expects an array");
  std::vector<CenterComponent> out;
  for (const auto& cj : *comps) {
    if (!cj.is_object() || !member(cj, "ideal")) ctx.error("components", "each component needs an 'ideal'");
    CenterComponent cc{ideal_of(ctx, ring, cj["ideal"], "ideal"), std::nullopt};
    if (const Json* f = member(cj, "frame")) cc.frame = Frame{poly_list(ctx, ring, *f, "frame")};
    out.push_back(std::move(cc));
  }
  return Center(whole, std::move(out));
}

BlowUpSequence forest_of(const Ctx& ctx, const Json& doc, const std::optional<Chart>& inherited) {
  if (!doc.is_object()) ctx.error("forest", "forest must be an object");
  Chart root;
  if (const Json* r = member(doc, "ring")) {
    RingPtr ring = ring_of(ctx, *r);
    Ideal rel = Ideal::zero(ring);
    if (const Json* rj = member(doc, "relations")) rel = ideal_of(ctx, ring, *rj, "relations");
    root = Chart::with_relations(rel);
    if (inherited) {
      if (!same_ring(ring, inherited->ring)) ctx.error("ring", "forest ring differs from the scene ring");
      if (!rel.equals(inherited->relations)) ctx.error("relations", "forest relations differ from the scene relations");
      root = *inherited;
    }
  } else if (inherited) {
    root = *inherited;
  } else {
    ctx.error("forest", "forest needs a 'ring'");
  }
  if (const Json* id = member(doc, "root")) root.id = id->get<std::string>();
  BlowUpSequence seq(root);
  const Json* recs = member(doc, "records");
  if (!recs) return seq;
  if (!recs->is_array()) ctx.error("records", "'records' expects an array");
  for (const auto& rj : *recs) {
    if (!rj.is_object() || !member(rj, "source") || !member(rj, "center"))
      ctx.error("records", "each record needs 'source' and 'center'");
    std::string src = rj["source"].get<std::string>();
    if (!seq.has_chart(src)) ctx.error(src, "unknown source chart '" + src + "'");
    Center c = center_of(ctx, root.ring, rj["center"]);
    const BlowUpRecord& rec = seq.blow_up_leaf(src, c);
    if (const Json* ids = member(rj, "charts")) {
      std::vector<std::string> want = ids->get<std::vector<std::string>>();
      std::vector<std::string> got;
      for (const auto& ch : rec.charts) got.push_back(ch.id);
      if (want != got) ctx.error(src, "replayed charts of '" + src + "' do not match the recorded ids");
    }
  }
  return seq;
}

std::shared_ptr<const DesingularizationOracle> oracle_of(const Ctx& ctx, const Json& v) {
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    if (s == "default") return default_oracle();
    if (s == "identity") return std::make_shared<IdentityOracle>();
    if (s == "monomial") return std::make_shared<MonomialOracle>();
    if (s == "strata") return std::make_shared<StrataOracle>();
    ctx.error(s, "unknown oracle '" + s + "'");
  }
  if (v.is_object() && member(v, "scripted")) {
    std::vector<ScriptedOracle::Step> steps;
    for (const auto& st : v["scripted"]) {
      if (!st.is_object() || !member(st, "chart") || !member(st, "center"))
        ctx.error("scripted", "scripted steps need 'chart' and 'center'");
      steps.push_back({st["chart"].get<std::string>(), st["center"].get<std::vector<std::string>>()});
    }
    return std::make_shared<ScriptedOracle>(std::move(steps));
  }
  ctx.error("oracle", "'oracle' expects a name or {\"scripted\": [...]}");
}

Json parse_json(const Ctx& ctx) {
  try {
    return Json::parse(ctx.text);
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    auto p = msg.find(": ", msg.find("parse error"));
    if (p != std::string::npos) msg = msg.substr(p + 2);
    fail(ErrorCode::parse, ctx.at(e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
  }
}

}  // namespace

Scene parse_scene(const std::string& text, const std::string& source) {
  Ctx ctx{text, source};
  Json doc = parse_json(ctx);
  try {
    if (!doc.is_object()) fail(ErrorCode::parse, ctx.at(0) + ": scene must be a JSON object");
    static const std::vector<std::string> known = {"ring", "relations", "pieces", "boundary", "center", "chart",
                                                   "ideal", "bad_locus", "forest", "oracle", "comment"};
    for (const auto& [k, v] : doc.items())
      if (std::find(known.begin(), known.end(), k) == known.end()) ctx.error(k, "unknown key '" + k + "'");
    Scene sc;
    if (!member(doc, "ring")) {
      if (const Json* f = member(doc, "forest"); f && member(*f, "ring")) {
        sc.ring = ring_of(ctx, (*f)["ring"]);
      } else {
        fail(ErrorCode::parse, ctx.at(0) + ": scene needs a 'ring'");
      }
    } else {
      sc.ring = ring_of(ctx, doc["ring"]);
    }
    Ideal rel = Ideal::zero(sc.ring);
    if (const Json* r = member(doc, "relations")) rel = ideal_of(ctx, sc.ring, *r, "relations");
    sc.root = Chart::with_relations(rel);
    if (const Json* p = member(doc, "pieces")) {
      if (!p->is_array()) ctx.error("pieces", "'pieces' expects an array of generator lists");
      for (const auto& piece : *p) sc.root.pieces.push_back(ideal_of(ctx, sc.ring, piece, "pieces"));
    }
    sc.boundary = Boundary(rel);
    if (const Json* b = member(doc, "boundary")) {
      if (!b->is_array()) ctx.error("boundary", "'boundary' expects an array");
      std::size_t k = 0;
      for (const auto& c : *b) {
        ++k;
        if (c.is_object()) {
          if (!member(c, "element")) ctx.error("boundary", "boundary objects need an 'element'");
          std::string id = c.value("id", "B" + std::to_string(k));
          sc.boundary.push_back(id, poly(ctx, sc.ring, c["element"], "element"));
        } else {
          sc.boundary.push_back("B" + std::to_string(k), poly(ctx, sc.ring, c, "boundary"));
        }
      }
    }
    if (const Json* c = member(doc, "center")) sc.center = center_of(ctx, sc.ring, *c);
    if (const Json* c = member(doc, "chart")) sc.chart = c->get<std::string>();
    if (const Json* z = member(doc, "ideal")) sc.ideal = ideal_of(ctx, sc.ring, *z, "ideal");
    if (const Json* z = member(doc, "bad_locus")) sc.bad_locus = ideal_of(ctx, sc.ring, *z, "bad_locus");
    if (const Json* f = member(doc, "forest")) sc.forest = forest_of(ctx, *f, sc.root);
    sc.oracle = default_oracle();
    if (const Json* o = member(doc, "oracle")) sc.oracle = oracle_of(ctx, *o);
    return sc;
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse, source + ": " + e.what());
  }
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str(), path);
}

Json polynomial_list(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json center_to_json(const Center& c) {
  Json j;
  j["ideal"] = polynomial_list(c.ideal().generators());
  j["declared"] = c.components_declared();
  Json comps = Json::array();
  for (const auto& comp : c.components()) {
    Json cj;
    cj["ideal"] = polynomial_list(comp.ideal.generators());
    if (comp.frame) cj["frame"] = polynomial_list(comp.frame->coords);
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

Json boundary_to_json(const Boundary& b) {
  Json a = Json::array();
  for (const auto& c : b.components()) {
    Json cj;
    cj["id"] = c.id;
    cj["element"] = c.element.to_string();
    cj["empty"] = c.empty;
    a.push_back(cj);
  }
  return a;
}

Json forest_to_json(const BlowUpSequence& seq) {
  Json j;
  j["ring"] = seq.root().ring->names();
  j["relations"] = polynomial_list(seq.root().relations.generators());
  j["root"] = seq.root().id;
  Json recs = Json::array();
  for (const auto& rec : seq.records()) {
    Json rj;
    rj["source"] = rec.source;
    rj["center"] = center_to_json(rec.center);
    Json ids = Json::array();
    for (const auto& c : rec.charts) ids.push_back(c.id);
    rj["charts"] = ids;
    recs.push_back(rj);
  }
  j["records"] = recs;
  return j;
}

BlowUpSequence forest_from_json(const Json& doc, const std::string& source) {
  std::string text = doc.dump();
  Ctx ctx{text, source};
  try {
    return forest_of(ctx, doc, std::nullopt);
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse, source + ": " + e.what());
  }
}

Json report_to_json(const std::string& command, const ResolutionReport& rep) {
  Json j;
  j["command"] = command;
  j["verdict"] = rep.verdict();
  Json flags = Json::array();
  for (const auto& f : rep.flags) {
    Json fj;
    fj["name"] = f.name;
    fj["value"] = f.value;
    if (!f.detail.empty()) fj["detail"] = f.detail;
    flags.push_back(fj);
  }
  j["flags"] = flags;
  j["forest"] = forest_to_json(rep.sequence);
  Json fb = Json::object();
  for (const auto& leaf : rep.sequence.leaves()) {
    auto it = rep.final_boundary.find(leaf);
    if (it != rep.final_boundary.end()) fb[leaf] = boundary_to_json(it->second);
  }
  j["final_boundary"] = fb;
  return j;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace bcalc
