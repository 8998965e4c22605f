#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "bcalc/poly/monomial.hpp"
#include "bcalc/poly/ring.hpp"

namespace bcalc {

using Rational = mpq_class;

struct Term {
  Monomial mono;
  Rational coef;
};

/// Multivariate polynomial over Q. Terms are kept sorted by degrevlex,
/// largest first, with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  /// Normalizes arbitrary terms: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const;
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().coef; }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// Smallest exponent of `var` among the terms (0 for the zero polynomial).
  unsigned order_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
  std::vector<std::size_t> support_variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial mul_monomial(const Monomial& m, const Rational& c) const;

  /// Image under x_i -> images[i]; all images share one target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Substitutes a single variable.
  Polynomial substitute_var(std::size_t var, const Polynomial& value) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Exact quotient f / g if g divides f.
  std::optional<Polynomial> divide_exact(const Polynomial& g) const;

  /// Scaled so the leading coefficient is 1.
  Polynomial monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;

  /// Moves into `target` sending variable i to variable var_map[i].
  Polynomial embed(const RingPtr& target, const std::vector<std::size_t>& var_map) const;

  std::string to_string() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial a);

std::string rational_to_string(const Rational& q);

/// Parses the kernel grammar (sums, products, powers, parentheses, rationals).
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

/// Canonical comparison key; total order used for deterministic sorting.
bool poly_less(const Polynomial& a, const Polynomial& b);

}  // namespace bcalc
