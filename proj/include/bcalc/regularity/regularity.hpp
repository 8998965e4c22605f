#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcalc/boundary/boundary.hpp"
#include "bcalc/chart/chart.hpp"

namespace bcalc {

struct RegularityReport {
  bool verdict = true;
  /// First failing stratum, as positions in the input boundary.
  std::optional<std::vector<std::size_t>> witness;
  /// "non-smooth" or "wrong-codimension" when a stratum fails.
  std::string criterion;
  /// Ideal of the bad points; the unit ideal when the verdict holds.
  Ideal bad_locus;
};

/// Ideal of the c x c minors of the Jacobian of `gens`; zero when no such minor exists.
Ideal jacobian_minors(const RingPtr& ring, const std::vector<Polynomial>& gens, std::size_t c);

/// Points of V(K) where the rank of the Jacobian drops below c.
Ideal rank_deficiency_ideal(const Ideal& K, std::size_t c);

RegularityReport is_regular_scheme(const Chart& chart);
RegularityReport is_snc(const Chart& chart, const Boundary& b);
RegularityReport is_strictly_monomial(const Chart& chart, const Boundary& b);
RegularityReport semi_regular_locus(const Chart& chart, const Boundary& b);
/// Z is an ideal of the chart ring; B is restricted onto V(Z).
RegularityReport has_snc_with_boundary(const Chart& chart, const Ideal& Z, const Boundary& b);
RegularityReport is_transversal(const Chart& chart, const Ideal& Z, const Boundary& b);
/// Every component of the center has snc with the boundary.
RegularityReport is_permissible(const Chart& chart, const Center& center, const Boundary& b);

}  // namespace bcalc
