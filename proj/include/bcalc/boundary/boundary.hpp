#pragma once

#include <map>
#include <string>
#include <vector>

#include "bcalc/chart/chart.hpp"

namespace bcalc {

struct BoundaryComponent {
  std::string id;
  Polynomial element;
  /// The element is a unit modulo the chart relations.
  bool empty = false;
};

/// Ordered boundary on one chart. Components are locally principal, given by one element each.
class Boundary {
 public:
  Boundary() = default;
  explicit Boundary(Ideal relations) : relations_(std::move(relations)) {}
  /// Components named B1, B2, ... unless ids are given.
  Boundary(Ideal relations, std::vector<Polynomial> elements, std::vector<std::string> ids = {});

  const Ideal& relations() const { return relations_; }
  const RingPtr& ring() const { return relations_.ring(); }
  const std::vector<BoundaryComponent>& components() const { return comps_; }
  std::size_t size() const { return comps_.size(); }
  const BoundaryComponent& operator[](std::size_t i) const { return comps_[i]; }
  std::vector<Polynomial> elements() const;

  void push_back(std::string id, const Polynomial& element);

  std::string to_string() const;

 private:
  Ideal relations_;
  std::vector<BoundaryComponent> comps_;
};

/// Element reduced modulo relations and scaled to a primitive form.
Polynomial normalize_element(const Polynomial& f, const Ideal& relations);

Boundary reduced_form(const Boundary& b);
Boundary ordered_union(const Boundary& a, const Boundary& b);
/// Squarefree product of the elements: defines |B|.
Polynomial support(const Boundary& b);
/// Product of the elements: defines [B].
Polynomial schematic_support(const Boundary& b);

struct StratumQuery {
  std::vector<std::size_t> J;
  Ideal closure;
  /// Elements of the components outside J; the open stratum is the closure minus their zeros.
  std::vector<Polynomial> removed;
  bool nonempty = false;
  int dimension = -1;
};
StratumQuery stratum(const Boundary& b, const std::vector<std::size_t>& J);

/// Substitutes every element along `images` into a chart with `target_relations`.
Boundary pullback_boundary(const Boundary& b, const std::vector<Polynomial>& images, const Ideal& target_relations);
/// Restriction onto the subscheme with ideal Z (identity map, relations extended by Z).
Boundary restrict_boundary(const Boundary& b, const Ideal& Z);

enum class TransformKind { total, principal, maximal, complete };
TransformKind parse_transform_kind(const std::string& s);
std::string transform_kind_name(TransformKind k);

struct TransformedBoundary {
  Boundary old_part;
  /// One component per blow-up, in blow-up order.
  Boundary new_part;
  /// Per old component: "pullback", "subtract:<components>" or "maximal:<powers>".
  std::vector<std::string> provenance;

  Boundary complete() const { return ordered_union(old_part, new_part); }
};

/// Transform of one element under a record, per produced chart.
std::map<std::string, Polynomial> transform_element(const BlowUpRecord& rec, const Polynomial& b, TransformKind kind,
                                                    std::map<std::string, std::string>* provenance = nullptr);

/// Single-record transform; the new component is named `exceptional_id`.
std::map<std::string, TransformedBoundary> transform_record(const BlowUpRecord& rec, const Boundary& b,
                                                            TransformKind kind, const std::string& exceptional_id = "E1");

/// Iterated transform along a sequence, per leaf chart. Earlier exceptional
/// components are themselves transformed by later records; leaves outside the
/// range of a record carry its component as the unit element.
std::map<std::string, TransformedBoundary> transform_sequence(const BlowUpSequence& seq, const Boundary& b,
                                                              TransformKind kind);

/// Pullback of every record's exceptional element to each leaf; 1 where absent.
std::map<std::string, Polynomial> exceptional_locus(const BlowUpSequence& seq);

}  // namespace bcalc
