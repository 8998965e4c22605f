#include "bcalc/poly/ring.hpp"

#include <cctype>
#include <set>

#include "bcalc/errors.hpp"

namespace bcalc {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars)
    fail(ErrorCode::resource_limit, "ring has " + std::to_string(names_.size()) +
                                        " variables, at most " + std::to_string(kMaxVars) +
                                        " supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) fail(ErrorCode::invalid_argument, "bad variable name '" + n + "'");
    if (!seen.insert(n).second) fail(ErrorCode::invalid_argument, "duplicate variable '" + n + "'");
  }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names() == b->names();
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b)) fail(ErrorCode::ring_mismatch, where);
}

RingPtr prepend_fresh(const RingPtr& r, std::size_t extra) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < extra; ++k) names.push_back("_t" + std::to_string(k));
  for (const auto& n : r->names()) names.push_back(n);
  return make_ring(std::move(names));
}

}  // namespace bcalc
