#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bcalc/poly/groebner.hpp"
#include "bcalc/poly/polynomial.hpp"

namespace bcalc {

/// Finitely generated ideal. Groebner bases are computed on demand and cached;
/// copies share the cache.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const std::vector<Polynomial>& groebner(const MonomialOrder& order = MonomialOrder::degrevlex()) const;

  /// Normal form modulo the degrevlex basis.
  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;

  bool is_unit() const;
  bool is_zero() const;
  /// Single generator of the ideal when it is visibly principal (GB of size <= 1).
  std::optional<Polynomial> principal_generator() const;

  Ideal substitute(const std::vector<Polynomial>& images) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>>> bases;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator+(const Ideal& a, const Polynomial& f);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal intersection(const Ideal& a, const Ideal& b);
/// I : (f)
Ideal quotient(const Ideal& I, const Polynomial& f);
/// I : J
Ideal quotient(const Ideal& I, const Ideal& J);
/// I : f^infinity, by iterated quotients until the ideal stabilizes.
Ideal saturation(const Ideal& I, const Polynomial& f);
/// I : f^infinity through I + (1 - t f) and elimination of t.
Ideal saturation_rabinowitsch(const Ideal& I, const Polynomial& f);
/// Generators of I intersected with the subring free of `vars`.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars);
/// Krull dimension of R/I; -1 for the unit ideal.
int dimension(const Ideal& I);
/// f in rad(I)
bool radical_contains(const Ideal& I, const Polynomial& f);
/// V(I) is contained in V(J): every generator of J lies in rad(I).
bool vanishes_on(const Ideal& J, const Ideal& I);

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);
Polynomial poly_lcm(const Polynomial& f, const Polynomial& g);

}  // namespace bcalc
