#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcalc/chart/center.hpp"

namespace bcalc {

/// Pointwise inverse of one blow-up step: child variable i equals
/// num[i]/den[i] evaluated at the parent point.
struct InverseStep {
  std::vector<Polynomial> num;
  std::vector<Polynomial> den;
};

struct ChartMap {
  std::string parent_id;
  /// Image of each parent variable, in this chart's ring.
  std::vector<Polynomial> images;
  /// Steps from the parent back to this chart (several inside a composite blow-up).
  std::vector<InverseStep> inverse;
};

struct Chart {
  std::string id = "r";
  RingPtr ring;
  Ideal relations;
  std::optional<ChartMap> parent;
  /// E_f restricted to this chart, for charts produced by a blow-up.
  std::optional<Polynomial> exceptional;
  /// Pure dimensional, so the Jacobian test may use a single codimension.
  bool equidimensional = true;
  /// Declared decomposition into pieces (ideals in this ring), optional.
  std::vector<Ideal> pieces;

  static Chart affine_space(RingPtr ring, std::string id = "r");
  static Chart with_relations(Ideal relations, std::string id = "r");

  bool is_empty() const { return relations.is_unit(); }
  std::size_t dimension() const;
};

/// Equidimensional by a sufficient criterion: zero, principal, or a complete intersection.
bool detect_equidimensional(const Ideal& rel);

/// Minimal surviving data of one blow-up.
struct BlowUpRecord {
  std::string source;
  Center center;
  std::vector<Chart> charts;
  /// Per produced chart, per center component: f^*(component) there, if present.
  std::vector<std::vector<std::optional<Polynomial>>> component_exceptional;

  std::size_t chart_index(const std::string& id) const;
};

/// Blows up `chart` along `center`. Components are processed in order; each
/// component is blown up in the charts where its pullback is non-empty.
BlowUpRecord blow_up(const Chart& chart, const Center& center);

class BlowUpSequence {
 public:
  BlowUpSequence() = default;
  explicit BlowUpSequence(Chart root);

  const Chart& root() const { return charts_.front(); }
  const std::vector<BlowUpRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  bool has_chart(const std::string& id) const;
  const Chart& chart(const std::string& id) const;
  bool is_leaf(const std::string& id) const;
  /// Every chart in creation order.
  const std::vector<Chart>& charts() const { return charts_; }
  std::vector<std::string> leaves() const;

  /// Appends a record whose source is a current leaf.
  void append(BlowUpRecord record);
  /// Blows up a leaf and appends the record.
  const BlowUpRecord& blow_up_leaf(const std::string& id, const Center& center);

  /// Images of root variables in the ring of chart `id`.
  std::vector<Polynomial> map_to_root(const std::string& id) const;
  /// Index of the record producing chart `id` (none for the root).
  std::optional<std::size_t> producing_record(const std::string& id) const;

 private:
  std::vector<Chart> charts_;
  std::vector<BlowUpRecord> records_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::size_t> producer_;
};

BlowUpSequence compose_sequence(const BlowUpSequence& seq, const BlowUpRecord& record);

/// Per produced chart: substitution image of Z plus the chart relations.
std::map<std::string, Ideal> total_transform(const BlowUpRecord& record, const Ideal& Z);
/// Per produced chart: total transform saturated by the exceptional element.
std::map<std::string, Ideal> strict_transform(const BlowUpRecord& record, const Ideal& Z);

/// Strict transform of a root subscheme at every chart of the forest.
std::map<std::string, Ideal> strict_transform_sequence(const BlowUpSequence& seq, const Ideal& Z);
/// Total transform of a root subscheme at every chart of the forest.
std::map<std::string, Ideal> total_transform_sequence(const BlowUpSequence& seq, const Ideal& Z);

/// Same centers replayed on the strict transforms of Z.
BlowUpSequence restrict_sequence(const BlowUpSequence& seq, const Ideal& Z);
/// Same centers replayed on an ambient chart containing the subscheme root.
BlowUpSequence push_forward_sequence(const BlowUpSequence& seq, const Chart& ambient);

/// Drops records with empty centers, relinking their unchanged chart to the source id.
BlowUpSequence omit_empty_blowups(const BlowUpSequence& seq);

/// Checks the witness laws on a grid: for points with nonzero exceptional
/// element, mapping to the parent and applying the inverse returns the point.
bool check_inverse_on_grid(const Chart& chart, int radius = 2, std::size_t max_points = 64);

}  // namespace bcalc
