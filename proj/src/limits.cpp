#include "bcalc/limits.hpp"

#include <cstdlib>
#include <string>

namespace bcalc {

namespace {

template <typename T>
void read_env(const char* name, T& slot) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return;
  try {
    unsigned long long n = std::stoull(v);
    if (n > 0) slot = static_cast<T>(n);
  } catch (...) {
  }
}

Limits make_limits() {
  Limits l;
  read_env("BCALC_MAX_BASIS", l.max_basis);
  read_env("BCALC_MAX_DEGREE", l.max_degree);
  read_env("BCALC_MAX_FACTOR_DEGREE", l.max_factor_degree);
  read_env("BCALC_MAX_INDEX_SET", l.max_index_set);
  return l;
}

}  // namespace

Limits& limits() {
  static Limits l = make_limits();
  return l;
}

void load_limits_from_env() { limits() = make_limits(); }

}  // namespace bcalc
