#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bcalc {

inline constexpr std::size_t kMaxVars = 16;

/// Ordered variable list of a polynomial ring over Q.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

/// Rings are interchangeable when their variable lists agree.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Throws ring_mismatch unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

/// Ring with `extra` fresh variables prepended (names start with '_').
RingPtr prepend_fresh(const RingPtr& r, std::size_t extra);

bool is_identifier(const std::string& s);

}  // namespace bcalc
