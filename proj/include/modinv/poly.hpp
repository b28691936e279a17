#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modinv/gf.hpp"

namespace modinv {

using Exponents = std::vector<int>;

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

// The polynomial ring GF(q)[x_1..x_d]. Monomials are ordered by graded
// reverse lexicographic order throughout.
class PolyRing {
public:
  static PolyRingPtr create(FieldSpecPtr field, int nvars);
  static PolyRingPtr create(FieldSpecPtr field, std::vector<std::string> names);

  const FieldSpecPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<std::string>& var_names() const { return names_; }

  // Structural equality: same field, same variable count and names.
  bool same_ring(const PolyRing& other) const;

private:
  PolyRing(FieldSpecPtr field, std::vector<std::string> names);

  FieldSpecPtr field_;
  int nvars_ = 0;
  std::vector<std::string> names_;
};

// Graded reverse lexicographic comparison. Both exponent vectors must have
// equal length. Returns <0, 0, >0 as a < b, a == b, a > b.
int grevlex_cmp(const Exponents& a, const Exponents& b);

struct GrevlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grevlex_cmp(a, b) < 0;
  }
};

struct Term {
  Exponents exp;
  FieldCode coeff;
};

// Exact multivariate polynomial. Terms are kept sorted in descending grevlex
// order with nonzero coefficients; the zero polynomial has no terms.
class Polynomial {
public:
  explicit Polynomial(PolyRingPtr ring);  // zero
  static Polynomial zero(PolyRingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(PolyRingPtr ring, FieldCode c);
  static Polynomial variable(PolyRingPtr ring, int i);
  static Polynomial monomial(PolyRingPtr ring, Exponents exp, FieldCode c);
  // Terms may repeat and carry zero coefficients; they are merged.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  // Zero counts as homogeneous of every degree.
  bool is_homogeneous_of_degree(int n) const;
  Polynomial homogeneous_component(int n) const;

  FieldCode coefficient(const Exponents& exp) const;
  const Term& leading_term() const;  // throws std::logic_error on zero

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial scaled(FieldCode c) const;
  Polynomial pow(unsigned e) const;

  // Exact quotient f / g, or nullopt if g does not divide f. Requires g != 0.
  std::optional<Polynomial> divided_exactly_by(const Polynomial& g) const;

  // Ring homomorphism sending x_i to images[i]; images must share the ring.
  Polynomial substitute(std::span<const Polynomial> images) const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);
  friend bool operator!=(const Polynomial& f, const Polynomial& g);

  std::string to_string() const;

private:
  void normalize();

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

// All monomials of total degree n in descending grevlex order, with index
// lookup and dense coordinate maps for the degree-n graded piece.
class MonomialBasis {
public:
  MonomialBasis(PolyRingPtr ring, int degree);

  const PolyRingPtr& ring() const { return ring_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(exponents_.size()); }
  const std::vector<Exponents>& exponents() const { return exponents_; }
  // -1 if exp is not a degree-n monomial of this ring.
  int index_of(const Exponents& exp) const;

  // f must be homogeneous of this degree (zero allowed).
  std::vector<FieldCode> coords_of(const Polynomial& f) const;
  Polynomial from_coords(std::span<const FieldCode> coords) const;

private:
  PolyRingPtr ring_;
  int degree_ = 0;
  std::vector<Exponents> exponents_;
};

// C(n + d - 1, d - 1) exponent vectors in descending grevlex order.
std::vector<Exponents> monomial_basis(const PolyRingPtr& ring, int degree);

}  // namespace modinv
