#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcalc/boundary/boundary.hpp"
#include "bcalc/regularity/regularity.hpp"

namespace bcalc {

struct Flag {
  std::string name;
  bool value = false;
  std::string detail;
};

struct ResolutionReport {
  BlowUpSequence sequence;
  /// Per leaf: the boundary the procedure was asked about, after the sequence.
  std::map<std::string, Boundary> final_boundary;
  std::vector<Flag> flags;

  bool verdict() const;
  const Flag* flag(const std::string& name) const;
};

/// Pluggable desingularization. Claims are replayed and verified by the caller.
class DesingularizationOracle {
 public:
  virtual ~DesingularizationOracle() = default;
  virtual std::string name() const = 0;
  /// A sequence rooted at `chart`, or nothing when the input is out of reach.
  virtual std::optional<BlowUpSequence> resolve(const Chart& chart, const Boundary& b) const = 0;
};

/// Empty sequence for inputs that are already semi-regular.
class IdentityOracle : public DesingularizationOracle {
 public:
  std::string name() const override { return "identity"; }
  std::optional<BlowUpSequence> resolve(const Chart& chart, const Boundary& b) const override;
};

/// Strata blow-ups for snc inputs.
class StrataOracle : public DesingularizationOracle {
 public:
  std::string name() const override { return "strata"; }
  std::optional<BlowUpSequence> resolve(const Chart& chart, const Boundary& b) const override;
};

/// Regular chart whose boundary support is snc: blows up support divisors
/// until the components are distinct and irreducible.
class MonomialOracle : public DesingularizationOracle {
 public:
  std::string name() const override { return "monomial"; }
  std::optional<BlowUpSequence> resolve(const Chart& chart, const Boundary& b) const override;
};

/// Replays fixed centers given as (chart id relative to the root, center ideal).
class ScriptedOracle : public DesingularizationOracle {
 public:
  struct Step {
    std::string chart;
    std::vector<std::string> center;
  };
  explicit ScriptedOracle(std::vector<Step> steps) : steps_(std::move(steps)) {}
  std::string name() const override { return "scripted"; }
  std::optional<BlowUpSequence> resolve(const Chart& chart, const Boundary& b) const override;

 private:
  std::vector<Step> steps_;
};

/// First member that answers.
class ChainOracle : public DesingularizationOracle {
 public:
  explicit ChainOracle(std::vector<std::shared_ptr<const DesingularizationOracle>> members)
      : members_(std::move(members)) {}
  std::string name() const override;
  std::optional<BlowUpSequence> resolve(const Chart& chart, const Boundary& b) const override;

 private:
  std::vector<std::shared_ptr<const DesingularizationOracle>> members_;
};

/// identity, then monomial, then strata.
std::shared_ptr<const DesingularizationOracle> default_oracle();

/// Checks an oracle claim: every leaf semi-regular for the complete transform,
/// every center inside the preimage of the bad locus of (chart, b).
std::vector<Flag> verify_desingularization(const BlowUpSequence& seq, const Boundary& b);

/// Appends the records of `sub`, whose root id is a leaf of `seq`.
void graft(BlowUpSequence& seq, const BlowUpSequence& sub);

// Multiplicity-dropping gadget: ring (x, y1..yn), Y = V(x), D_i = V(x, y_i), Z = V(phi).
struct MultiplicityVector {
  std::vector<unsigned> m;
};
/// Reads Z|_Y = sum m_i D_i; fails with shape-mismatch unless phi|_{x=0} is a constant times a monomial in the y's.
MultiplicityVector restricted_multiplicities(const Polynomial& phi, std::size_t y_var, const std::vector<std::size_t>& d_vars);

struct GadgetResult {
  BlowUpSequence sequence;
  std::string leaf;
  MultiplicityVector before;
  MultiplicityVector after;
  /// f^>(Y+Z) divided by the strict transform of Y, on the leaf.
  Polynomial residual;
  std::size_t rounds = 0;
};

/// Blows up D_j and then its exceptional divisor; verifies Y'' = Y and the multiplicity update.
GadgetResult chartlem_gadget(const Chart& chart, const Polynomial& phi, std::size_t y_var,
                             const std::vector<std::size_t>& d_vars, std::size_t j);
/// Repeats the gadget on the first nonzero multiplicity until the restricted divisor is empty.
GadgetResult kill_restricted_divisor(const Chart& chart, const Polynomial& phi, std::size_t y_var,
                                     const std::vector<std::size_t>& d_vars);

ResolutionReport resolve_snc_strata(const Chart& chart, const Boundary& b);

ResolutionReport principalize(const Chart& chart, const Ideal& Z, const DesingularizationOracle& oracle);

ResolutionReport separate_boundary(const Chart& chart, const Boundary& b, const std::optional<Ideal>& bad_locus,
                                   const DesingularizationOracle& oracle);

struct WhitneyRound {
  std::string chart;
  std::string strict_transform;
  bool matches = false;
  bool non_monomial_at_origin = false;
  /// Charts of this round where the strict transform is singular on the exceptional divisor.
  std::vector<std::string> singular_charts;
};
struct WhitneyReport {
  BlowUpSequence sequence;
  std::vector<WhitneyRound> rounds;
  bool verdict() const;
};
WhitneyReport whitney_umbrella_iterate(unsigned rounds);

enum class Theorem { divth, bth, princth };
Theorem parse_theorem(const std::string& s);
std::string theorem_name(Theorem t);
/// Recomputes the clauses of the chosen theorem. Z is used by princth, the
/// declared bad locus (when given) for center support.
ResolutionReport verify_sequence_against_theorem(const BlowUpSequence& seq, const Boundary& b, Theorem theorem,
                                                 const std::optional<Ideal>& Z = std::nullopt,
                                                 const std::optional<Ideal>& bad_locus = std::nullopt);

// Functoriality along exact regular morphisms Y -> X given by images of the X variables.
struct RegularMorphism {
  RingPtr target;                  // ring of Y
  std::vector<Polynomial> images;  // X variable -> polynomial on Y
};
/// Y = X x A^1 with a fresh variable.
RegularMorphism fresh_variable_extension(const RingPtr& ring, const std::string& name);
/// x_i -> c_i * x_i with nonzero c_i.
RegularMorphism diagonal_change(const RingPtr& ring, const std::vector<Rational>& scale);

/// Pullback of every record along the morphism, empty blow-ups omitted.
BlowUpSequence pullback_sequence(const BlowUpSequence& seq, const RegularMorphism& g);
/// Record-by-record comparison of sources, chart ids and center ideals.
bool same_sequence(const BlowUpSequence& a, const BlowUpSequence& b, std::string* why = nullptr);

}  // namespace bcalc
