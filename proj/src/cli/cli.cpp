#include "bcalc/cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bcalc/errors.hpp"
#include "bcalc/io/scene.hpp"
#include "bcalc/limits.hpp"

namespace bcalc {

namespace {

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::resource_limit: return 3;
    case ErrorCode::oracle_cannot_resolve:
    case ErrorCode::verification_failure:
    case ErrorCode::certification_failure: return 1;
    default: return 2;
  }
}

Json chart_to_json(const Chart& c) {
  Json j;
  j["id"] = c.id;
  if (c.parent) {
    j["parent"] = c.parent->parent_id;
    j["images"] = polynomial_list(c.parent->images);
  }
  if (c.exceptional) j["exceptional"] = c.exceptional->to_string();
  j["relations"] = polynomial_list(c.relations.groebner());
  return j;
}

Json charts_to_json(const std::vector<Chart>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(chart_to_json(c));
  return a;
}

void trace(std::ostream& err, const BlowUpSequence& seq) {
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const auto& rec = seq.records()[k];
    err << "record " << k + 1 << ": blow up " << rec.source << " along " << rec.center.ideal().to_string() << "\n";
    for (const auto& c : rec.charts) {
      err << "  " << c.id << ":";
      const auto& names = c.ring->names();
      for (std::size_t i = 0; i < names.size(); ++i) err << " " << names[i] << "->" << c.parent->images[i].to_string();
      if (c.exceptional) err << "  E=" << c.exceptional->to_string();
      err << "\n";
    }
  }
}

std::vector<Polynomial> parse_generators(const RingPtr& r, const std::string& s) {
  std::vector<Polynomial> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_polynomial(r, item));
  return out;
}

BlowUpSequence scene_forest(const Scene& sc) { return sc.forest ? *sc.forest : BlowUpSequence(sc.root); }

std::string target_chart(const Scene& sc, const BlowUpSequence& seq, const std::string& flag) {
  if (!flag.empty()) return flag;
  if (sc.chart) return *sc.chart;
  auto leaves = seq.leaves();
  if (leaves.size() != 1) fail(ErrorCode::invalid_argument, "several leaves; choose one with --chart");
  return leaves.front();
}

Json regularity_to_json(const std::string& predicate, const RegularityReport& r) {
  Json j;
  j["command"] = "check";
  j["predicate"] = predicate;
  j["verdict"] = r.verdict;
  if (!r.criterion.empty()) j["criterion"] = r.criterion;
  if (r.witness) {
    Json w = Json::array();
    for (auto p : *r.witness) w.push_back(p + 1);
    j["witness"] = w;
  }
  j["bad_locus"] = polynomial_list(r.bad_locus.groebner());
  return j;
}

struct Options {
  std::string scene;
  std::string kind = "complete";
  std::string predicate;
  std::string theorem;
  std::string chart;
  std::string center;
  std::string state;
  unsigned rounds = 0;
  bool trace = false;
};

int report_exit(std::ostream& out, const Json& doc, bool verdict) {
  out << dump(doc);
  return verdict ? 0 : 1;
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out, std::ostream& err) {
  if (cmd == "demo") {
    WhitneyReport w = whitney_umbrella_iterate(o.rounds);
    Json j;
    j["command"] = "demo whitney";
    j["rounds"] = o.rounds;
    j["verdict"] = w.verdict();
    Json rs = Json::array();
    for (const auto& r : w.rounds) {
      Json rj;
      rj["chart"] = r.chart;
      rj["strict_transform"] = r.strict_transform;
      rj["matches"] = r.matches;
      rj["non_monomial_at_origin"] = r.non_monomial_at_origin;
      rj["singular_charts"] = r.singular_charts;
      rs.push_back(rj);
    }
    j["matches"] = rs;
    j["forest"] = forest_to_json(w.sequence);
    if (o.trace) trace(err, w.sequence);
    return report_exit(out, j, w.verdict());
  }

  if (cmd == "step") {
    BlowUpSequence seq;
    std::optional<Scene> sc;
    if (!o.scene.empty()) sc = load_scene_file(o.scene);
    if (std::filesystem::exists(o.state)) {
      std::ifstream in(o.state, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      Json doc;
      try {
        doc = Json::parse(ss.str());
      } catch (const Json::parse_error& e) {
        fail(ErrorCode::parse, o.state + ": " + e.what());
      }
      seq = forest_from_json(doc, o.state);
    } else if (sc) {
      seq = scene_forest(*sc);
    } else {
      fail(ErrorCode::invalid_argument, "no state file yet; give a scene to start from");
    }
    Json j;
    j["command"] = "step";
    std::optional<Center> center;
    if (!o.center.empty()) {
      center = Center(Ideal(seq.root().ring, parse_generators(seq.root().ring, o.center)));
    } else if (sc && sc->center) {
      center = sc->center;
    }
    if (center) {
      std::string id = o.chart.empty() ? (seq.leaves().size() == 1 ? seq.leaves().front() : "") : o.chart;
      if (id.empty()) fail(ErrorCode::invalid_argument, "several leaves; choose one with --chart");
      const BlowUpRecord& rec = seq.blow_up_leaf(id, *center);
      j["record"] = seq.size();
      j["charts"] = charts_to_json(rec.charts);
      std::ofstream outf(o.state, std::ios::binary | std::ios::trunc);
      outf << dump(forest_to_json(seq));
    }
    j["leaves"] = seq.leaves();
    if (o.trace) trace(err, seq);
    out << dump(j);
    return 0;
  }

  Scene sc = load_scene_file(o.scene);
  if (cmd == "blowup") {
    BlowUpSequence seq = scene_forest(sc);
    std::optional<Center> center = sc.center;
    if (!o.center.empty()) center = Center(Ideal(sc.ring, parse_generators(sc.ring, o.center)));
    if (!center) fail(ErrorCode::invalid_argument, "blowup needs a center");
    std::string id = target_chart(sc, seq, o.chart);
    const BlowUpRecord& rec = seq.blow_up_leaf(id, *center);
    Json j;
    j["command"] = "blowup";
    j["charts"] = charts_to_json(rec.charts);
    j["forest"] = forest_to_json(seq);
    if (o.trace) trace(err, seq);
    out << dump(j);
    return 0;
  }
  if (cmd == "transform") {
    BlowUpSequence seq = scene_forest(sc);
    if (sc.center) seq.blow_up_leaf(target_chart(sc, seq, o.chart), *sc.center);
    Json leaves = Json::object();
    if (o.kind == "strict") {
      std::vector<std::map<std::string, Ideal>> st;
      for (const auto& c : sc.boundary.components())
        st.push_back(strict_transform_sequence(seq, Ideal::principal(c.element) + sc.root.relations));
      for (const auto& leaf : seq.leaves()) {
        Json old = Json::array();
        for (std::size_t i = 0; i < st.size(); ++i) {
          Json cj;
          cj["id"] = sc.boundary[i].id;
          const Ideal& s = st[i].at(leaf);
          auto g = s.principal_generator();
          cj["element"] = g ? normalize_element(*g, seq.chart(leaf).relations).to_string() : s.to_string();
          cj["empty"] = s.is_unit();
          cj["provenance"] = "strict";
          old.push_back(cj);
        }
        Json lj;
        lj["old"] = old;
        lj["new"] = Json::array();
        leaves[leaf] = lj;
      }
    } else {
      TransformKind k = parse_transform_kind(o.kind);
      auto tr = transform_sequence(seq, sc.boundary, k);
      for (const auto& leaf : seq.leaves()) {
        const auto& t = tr.at(leaf);
        Json old = boundary_to_json(t.old_part);
        for (std::size_t i = 0; i < old.size(); ++i) old[i]["provenance"] = t.provenance[i];
        Json lj;
        lj["old"] = old;
        lj["new"] = boundary_to_json(t.new_part);
        leaves[leaf] = lj;
      }
    }
    Json j;
    j["command"] = "transform";
    j["kind"] = o.kind;
    j["leaves"] = leaves;
    j["forest"] = forest_to_json(seq);
    if (o.trace) trace(err, seq);
    out << dump(j);
    return 0;
  }
  if (cmd == "check") {
    const std::string& p = o.predicate;
    RegularityReport r;
    auto need_ideal = [&]() -> const Ideal& {
      if (!sc.ideal) fail(ErrorCode::invalid_argument, "predicate " + p + " needs 'ideal' in the scene");
      return *sc.ideal;
    };
    if (p == "regular") r = is_regular_scheme(sc.root);
    else if (p == "snc") r = is_snc(sc.root, sc.boundary);
    else if (p == "strictly-monomial") r = is_strictly_monomial(sc.root, sc.boundary);
    else if (p == "semi-regular") r = semi_regular_locus(sc.root, sc.boundary);
    else if (p == "transversal") r = is_transversal(sc.root, need_ideal(), sc.boundary);
    else if (p == "snc-with") r = has_snc_with_boundary(sc.root, need_ideal(), sc.boundary);
    else if (p == "permissible") {
      if (!sc.center) fail(ErrorCode::invalid_argument, "predicate permissible needs 'center' in the scene");
      r = is_permissible(sc.root, *sc.center, sc.boundary);
    } else {
      fail(ErrorCode::invalid_argument, "unknown predicate '" + p + "'");
    }
    return report_exit(out, regularity_to_json(p, r), r.verdict);
  }
  ResolutionReport rep;
  if (cmd == "separate") {
    rep = separate_boundary(sc.root, sc.boundary, sc.bad_locus, *sc.oracle);
  } else if (cmd == "resolve-strata") {
    rep = resolve_snc_strata(sc.root, sc.boundary);
  } else if (cmd == "principalize") {
    if (!sc.ideal) fail(ErrorCode::invalid_argument, "principalize needs 'ideal' in the scene");
    rep = principalize(sc.root, *sc.ideal, *sc.oracle);
  } else if (cmd == "verify") {
    rep = verify_sequence_against_theorem(scene_forest(sc), sc.boundary, parse_theorem(o.theorem), sc.ideal,
                                          sc.bad_locus);
  } else {
    fail(ErrorCode::invalid_argument, "unknown command '" + cmd + "'");
  }
  Json j = report_to_json(cmd == "verify" ? "verify " + o.theorem : cmd, rep);
  if (o.trace) trace(err, rep.sequence);
  return report_exit(out, j, rep.verdict());
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blow-up charts, boundary transforms and resolution procedures over Q", "bcalc"};
  app.require_subcommand(1);
  Options o;
  auto scene_arg = [&](CLI::App* s) {
    s->add_option("scene", o.scene, "scene document (JSON)")->required()->check(CLI::ExistingFile);
    s->add_flag("--trace", o.trace, "print charts and equations per step to stderr");
  };
  auto* blowup = app.add_subcommand("blowup", "blow up one chart along the scene center");
  scene_arg(blowup);
  blowup->add_option("--chart", o.chart, "chart to blow up");
  blowup->add_option("--center", o.center, "center generators, comma separated");
  auto* transform = app.add_subcommand("transform", "transform the boundary along the forest");
  scene_arg(transform);
  transform->add_option("--kind", o.kind, "transform kind")
      ->check(CLI::IsMember({"total", "strict", "principal", "complete", "maximal"}));
  transform->add_option("--chart", o.chart, "chart blown up by the scene center");
  auto* check = app.add_subcommand("check", "evaluate a regularity predicate");
  scene_arg(check);
  check->add_option("--predicate", o.predicate, "predicate")
      ->required()
      ->check(CLI::IsMember({"regular", "snc", "strictly-monomial", "semi-regular", "transversal", "snc-with",
                             "permissible"}));
  scene_arg(app.add_subcommand("separate", "separate boundary components from the bad locus"));
  scene_arg(app.add_subcommand("resolve-strata", "resolve an snc boundary by its strata"));
  scene_arg(app.add_subcommand("principalize", "principalize the scene ideal"));
  auto* verify = app.add_subcommand("verify", "recheck a forest against a theorem");
  scene_arg(verify);
  verify->add_option("--theorem", o.theorem, "theorem")
      ->required()
      ->check(CLI::IsMember({"divth", "bth", "Bth", "princth"}));
  auto* demo = app.add_subcommand("demo", "built-in demonstrations");
  auto* whitney = demo->add_subcommand("whitney", "iterate the Whitney umbrella blow-up");
  demo->require_subcommand(1);
  whitney->add_option("--rounds", o.rounds, "number of rounds")->required();
  whitney->add_flag("--trace", o.trace, "print charts per step to stderr");
  auto* step = app.add_subcommand("step", "one blow-up over a persisted forest");
  step->add_option("--state", o.state, "forest file, created on first use")->required();
  step->add_option("--scene", o.scene, "scene to start from")->check(CLI::ExistingFile);
  step->add_option("--chart", o.chart, "chart to blow up");
  step->add_option("--center", o.center, "center generators, comma separated");
  step->add_flag("--trace", o.trace, "print the forest to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  load_limits_from_env();
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, out, err);
  } catch (const Error& e) {
    err << "bcalc: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "bcalc: internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bcalc
