#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bcalc/cli/cli.hpp"
#include "bcalc/errors.hpp"
#include "bcalc/io/scene.hpp"
#include "bcalc/limits.hpp"
#include "test_util.hpp"

using namespace bcalc;
using bcalc::testing::I;
using bcalc::testing::P;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "bcalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("bcalc_cli_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST(Scene, ForestRoundTripIsBitExact) {
  auto r = make_ring({"x", "y", "z"});
  BlowUpSequence seq(Chart::affine_space(r));
  seq.blow_up_leaf("r", Center(I(r, {"x", "y"})));
  seq.blow_up_leaf("r/y", Center(I(r, {"y", "z"})));
  seq.blow_up_leaf("r/x", Center(I(r, {"y", "x-1"})));
  seq.blow_up_leaf("r/y/z", Center(I(r, {"x*z"})));
  std::string once = dump(forest_to_json(seq));
  BlowUpSequence back = forest_from_json(Json::parse(once));
  EXPECT_EQ(dump(forest_to_json(back)), once);
  std::string why;
  EXPECT_TRUE(same_sequence(seq, back, &why)) << why;
}

TEST(Scene, TamperedChartIdsRejected) {
  auto r = make_ring({"x", "y"});
  BlowUpSequence seq(Chart::affine_space(r));
  seq.blow_up_leaf("r", Center(I(r, {"x", "y"})));
  Json doc = forest_to_json(seq);
  doc["records"][0]["charts"][1] = "r/q";
  EXPECT_THROW(forest_from_json(doc), Error);
}

TEST(Scene, DiagnosticsCarryLineAndColumn) {
  try {
    parse_scene("{\n  \"ring\": [\"x\"],\n  \"boundary\": [\"x\",\n}", "s.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse);
    EXPECT_NE(std::string(e.what()).find("s.json:4:"), std::string::npos) << e.what();
  }
  try {
    parse_scene("{\n  \"ring\": [\"x\"],\n  \"boundary\": [\"x+\"]\n}", "s.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("s.json:3:16"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_scene("{\"ring\": [\"x\"], \"bogus\": 1}"), Error);
}

TEST(Scene, ParsesEveryKey) {
  Scene sc = parse_scene(R"({
    "ring": ["x", "y", "z"],
    "relations": ["x*z", "y*z"],
    "pieces": [["z"], ["x", "y"]],
    "boundary": ["x", {"id": "D", "element": "y"}],
    "center": {"ideal": ["x", "y"], "frame": ["x", "y", "z"]},
    "chart": "r",
    "ideal": ["x"],
    "bad_locus": ["x", "y", "z"],
    "oracle": "strata"
  })");
  EXPECT_EQ(sc.boundary.size(), 2u);
  EXPECT_EQ(sc.boundary[1].id, "D");
  EXPECT_EQ(sc.root.pieces.size(), 2u);
  ASSERT_TRUE(sc.center.has_value());
  EXPECT_TRUE(sc.center->components()[0].frame.has_value());
  EXPECT_EQ(sc.oracle->name(), "strata");
}

TEST(Cli, ExitCodes) {
  auto doubled = write_temp("doubled.json", R"({"ring": ["x", "y"], "boundary": ["x", "x"]})");
  CliRun r = run({"check", "--predicate", "snc", doubled});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"verdict\": false"), std::string::npos);

  auto pair = write_temp("pair.json", R"({"ring": ["x", "y"], "boundary": ["x", "y"]})");
  EXPECT_EQ(run({"check", "--predicate", "snc", pair}).code, 0);

  auto broken = write_temp("broken.json", "{\n  \"ring\": [\"x\"\n");
  CliRun b = run({"check", "--predicate", "snc", broken});
  EXPECT_EQ(b.code, 2);
  EXPECT_NE(b.err.find(":3:"), std::string::npos) << b.err;

  EXPECT_EQ(run({"demo", "whitney", "--rounds", "0"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"resolve-strata", doubled}).code, 2);

  auto heavy = write_temp("heavy.json", R"({"ring": ["x", "y"], "boundary": ["x^40*y^40-1"]})");
  setenv("BCALC_MAX_FACTOR_DEGREE", "8", 1);
  CliRun h = run({"check", "--predicate", "strictly-monomial", heavy});
  unsetenv("BCALC_MAX_FACTOR_DEGREE");
  load_limits_from_env();
  EXPECT_EQ(h.code, 3) << h.err;
}

TEST(Cli, WhitneyDemoAndDeterminism) {
  CliRun a = run({"demo", "whitney", "--rounds", "3"});
  EXPECT_EQ(a.code, 0);
  std::size_t matches = 0;
  for (std::size_t p = a.out.find("\"matches\": true"); p != std::string::npos; p = a.out.find("\"matches\": true", p + 1))
    ++matches;
  EXPECT_EQ(matches, 3u);
  EXPECT_EQ(run({"demo", "whitney", "--rounds", "3"}).out, a.out);

  auto sep = write_temp("sep.json", R"J({
    "ring": ["x", "y"], "boundary": ["x*(x-y^2)"], "bad_locus": ["x", "y"],
    "oracle": {"scripted": [{"chart": "r", "center": ["x", "y"]}, {"chart": "r/y", "center": ["x", "y"]}]}})J");
  CliRun s1 = run({"separate", sep});
  EXPECT_EQ(s1.code, 0) << s1.err;
  EXPECT_EQ(run({"separate", sep}).out, s1.out);
}

TEST(Cli, StepPersistsAndVerifyReadsForest) {
  auto pair = write_temp("step_pair.json", R"({"ring": ["x", "y"], "boundary": ["x", "y"]})");
  auto state = (std::filesystem::temp_directory_path() / "bcalc_cli_test_state.json").string();
  std::filesystem::remove(state);
  EXPECT_EQ(run({"step", "--state", state, "--scene", pair, "--center", "x,y"}).code, 0);
  EXPECT_EQ(run({"step", "--state", state, "--chart", "r/x", "--center", "y"}).code, 0);
  EXPECT_EQ(run({"step", "--state", state, "--chart", "r/y", "--center", "x"}).code, 0);
  CliRun show = run({"step", "--state", state});
  EXPECT_NE(show.out.find("r/x/E"), std::string::npos);

  std::ifstream in(state);
  Json forest = Json::parse(in);
  Json scene;
  scene["ring"] = {"x", "y"};
  scene["boundary"] = {"x", "y"};
  scene["forest"] = forest;
  auto vs = write_temp("verify.json", dump(scene));
  CliRun v = run({"verify", "--theorem", "divth", vs});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  CliRun t = run({"transform", "--kind", "complete", vs});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("\"E3\""), std::string::npos);
  CliRun st = run({"transform", "--kind", "strict", vs});
  EXPECT_EQ(st.code, 0) << st.err;

  auto bl = write_temp("blowup.json", R"({"ring": ["x", "y"], "center": ["x", "y"]})");
  CliRun bu = run({"blowup", bl});
  EXPECT_EQ(bu.code, 0);
  EXPECT_NE(bu.out.find("\"exceptional\": \"x\""), std::string::npos);
}

TEST(Cli, CheckPredicates) {
  auto sc = write_temp("checks.json", R"({"ring": ["x", "y", "z"], "boundary": ["x"], "ideal": ["y"],
                                          "center": ["y", "z"]})");
  for (const char* p : {"regular", "snc", "strictly-monomial", "semi-regular", "transversal", "snc-with",
                        "permissible"})
    EXPECT_EQ(run({"check", "--predicate", p, sc}).code, 0) << p;
  auto pz = write_temp("princ.json", R"({"ring": ["x", "y"], "ideal": ["x^2", "x*y"]})");
  EXPECT_EQ(run({"principalize", pz}).code, 0);
}
