#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modinv/group.hpp"
#include "modinv/poly.hpp"
#include "modinv/steenrod.hpp"

namespace modinv {

// An element num / base^exp of the localization at a homogeneous nonzero
// base. Kept normalized: exp == 0 whenever num == 0, and base does not divide
// num while exp > 0. Equality, addition and subtraction require the same
// base polynomial.
class Fraction {
public:
  Fraction(Polynomial num, Polynomial base, int exp);

  const Polynomial& num() const { return num_; }
  const Polynomial& base() const { return base_; }
  int exp() const { return exp_; }
  const PolyRingPtr& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  // Internal degree deg(num) - exp * deg(base); nullopt for zero or a
  // non-homogeneous numerator.
  std::optional<int> degree() const;

  Fraction operator-() const;
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Polynomial& s, const Fraction& u);
  Fraction scaled(FieldCode c) const;

  // Cross-multiplication equality; throws on mismatched bases.
  friend bool operator==(const Fraction& a, const Fraction& b);
  friend bool operator!=(const Fraction& a, const Fraction& b);

  std::string to_string() const;

private:
  Polynomial num_;
  Polynomial base_;
  int exp_ = 0;
};

// Validates that num and base are fixed by the group before constructing.
Fraction make_invariant_fraction(const Group& G, Polynomial num,
                                 Polynomial base, int exp);

// Q^0(u), ..., Q^{r_max}(u): extension of the Steenrod components to the
// localization via the recursion
//   Q^r(a / x^m) = x^{-m} (P^r(a) - sum_{i+j=r, j<r} P^i(x^m) Q^j(a / x^m)).
std::vector<Fraction> q_tower(const Fraction& u, int r_max);
// Same recursion run on an explicit (and possibly non-reduced)
// representation num / base^exp; the results do not depend on it.
std::vector<Fraction> q_tower_from_representation(const Polynomial& num,
                                                  const Polynomial& base,
                                                  int exp, int r_max);
Fraction q_r(int r, const Fraction& u);

// S_x -> S_xy: a / x^m maps to a y^m / (xy)^m. y must be homogeneous nonzero.
Fraction map_to(const Fraction& u, const Polynomial& y);

struct CartanAxiomReport {
  bool holds;
  int first_failure_r;  // -1 when holds
};

// Checks Q^r(s u) == sum_{i+j=r} P^i(s) Q^j(u) for r = 0..r_max.
CartanAxiomReport verify_cartan_axiom(const Polynomial& s, const Fraction& u,
                                      int r_max);

}  // namespace modinv
