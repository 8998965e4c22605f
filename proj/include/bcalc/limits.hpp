#pragma once

#include <cstddef>

namespace bcalc {

/// Desk-scale caps. Defaults can be overridden through the environment:
/// BCALC_MAX_BASIS, BCALC_MAX_DEGREE, BCALC_MAX_FACTOR_DEGREE, BCALC_MAX_INDEX_SET.
struct Limits {
  std::size_t max_basis = 1000;
  unsigned max_degree = 64;
  unsigned max_factor_degree = 4096;  // degree of the Kronecker image
  std::size_t max_index_set = 8;      // |I| for stratum enumeration
};

Limits& limits();

/// Re-reads the environment overrides (used by the CLI at startup).
void load_limits_from_env();

}  // namespace bcalc
