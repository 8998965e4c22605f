#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcalc/procedures/procedures.hpp"

namespace bcalc {

using Json = nlohmann::ordered_json;

/// Parsed scene document. Keys:
///   ring (names), relations, pieces, boundary, center, chart, ideal,
///   bad_locus, forest, oracle.
struct Scene {
  RingPtr ring;
  Chart root;
  Boundary boundary;
  std::optional<Center> center;
  /// Target chart for center-based commands; defaults to the forest leaf or root.
  std::optional<std::string> chart;
  std::optional<Ideal> ideal;
  std::optional<Ideal> bad_locus;
  std::optional<BlowUpSequence> forest;
  std::shared_ptr<const DesingularizationOracle> oracle;
};

/// Throws Error(parse, "<source>:<line>:<col>: ...") for malformed input.
Scene parse_scene(const std::string& text, const std::string& source = "<scene>");
Scene load_scene_file(const std::string& path);

Json polynomial_list(const std::vector<Polynomial>& ps);
Json center_to_json(const Center& c);
Json boundary_to_json(const Boundary& b);

/// Forest document: ring, relations, root id and the remembered centers.
Json forest_to_json(const BlowUpSequence& seq);
/// Replays the centers; chart ids must come out as recorded.
BlowUpSequence forest_from_json(const Json& doc, const std::string& source = "<forest>");

Json report_to_json(const std::string& command, const ResolutionReport& rep);

/// Two-space indentation and a final newline.
std::string dump(const Json& doc);

}  // namespace bcalc
