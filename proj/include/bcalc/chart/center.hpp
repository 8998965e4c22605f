#pragma once

#include <optional>
#include <vector>

#include "bcalc/poly/ideal.hpp"

namespace bcalc {

/// Invertible affine change of coordinates: coords[k] is the new k-th
/// coordinate (named like variable k) as an affine form in the old ones.
struct Frame {
  std::vector<Polynomial> coords;
};

struct CenterComponent {
  Ideal ideal;
  std::optional<Frame> frame;
};

/// Blow-up center with its decomposition into disjoint components.
class Center {
 public:
  Center() = default;
  /// Components detected automatically: principal ideals split by factor
  /// connectivity, linear and monomial ideals count as one piece.
  explicit Center(Ideal ideal);
  Center(Ideal ideal, std::vector<CenterComponent> components);
  static Center with_frame(Ideal ideal, Frame frame);

  const Ideal& ideal() const { return ideal_; }
  const std::vector<CenterComponent>& components() const { return components_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  /// Unit ideal: the trivial blow-up.
  bool is_empty() const { return components_.empty(); }
  bool components_declared() const { return declared_; }

 private:
  Ideal ideal_;
  std::vector<CenterComponent> components_;
  bool declared_ = false;
};

/// Affine form data: coefficients of each variable plus constant term.
struct AffineForm {
  std::vector<Rational> linear;
  Rational constant;
};
std::optional<AffineForm> affine_form(const Polynomial& p);

/// All generators of the reduced degrevlex basis have degree <= 1.
bool is_linear_ideal(const Ideal& I);

/// Monomial ideal of the shape m * <x_S>^k. Returns (m, S, k).
struct MonomialCenterShape {
  Polynomial factor;
  std::vector<std::size_t> vars;
  unsigned power = 1;
};
std::optional<MonomialCenterShape> monomial_center_shape(const Ideal& I);
bool is_monomial_ideal(const Ideal& I);

/// Frame in which the linear ideal I is generated by coordinates; the
/// coordinate indices are returned in `vars`.
Frame auto_frame(const Ideal& I, std::vector<std::size_t>& vars);

/// Validates a user frame against I; returns coordinate indices generating I.
std::vector<std::size_t> frame_coordinates(const Frame& frame, const Ideal& I);

}  // namespace bcalc
