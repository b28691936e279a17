#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "modinv/group.hpp"
#include "modinv/poly.hpp"

namespace modinv {

// C(n, k) mod p by Lucas' theorem.
std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);

// The total operation P(xi)(f) = sum_i P^i(f) xi^i, where xi is a formal
// variable recording the component shift. Determined by: P(xi)(v) = v + v^q xi
// on linear forms, additivity, multiplicativity, and P(xi)(1) = 1. For
// homogeneous f of degree n: P^0(f) = f, P^n(f) = f^q, and P^i(f) = 0 for
// i > n. deg P^i(f) = deg f + i(q-1).
class TotalSteenrod {
public:
  TotalSteenrod(PolyRingPtr ring, std::vector<Polynomial> coefficients);

  const PolyRingPtr& ring() const { return ring_; }
  // P^i(f); zero polynomial beyond the stored range.
  Polynomial coefficient(std::size_t i) const;
  // Number of stored coefficients (top nonzero index + 1; 0 for f = 0).
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }

private:
  PolyRingPtr ring_;
  std::vector<Polynomial> coeffs_;
};

TotalSteenrod steenrod_total(const Polynomial& f);
// P^i(f) alone.
Polynomial steenrod_power(std::size_t i, const Polynomial& f);

enum class PStarStatus { invariant, not_invariant, inconclusive };

struct PStarWitness {
  std::size_t gen_index;
  std::size_t power;
  Polynomial value;  // P^power(f_gen), not in the ideal
};

struct PStarCheck {
  PStarStatus status;
  std::optional<PStarWitness> witness;
  // (generator index, power) pairs whose target degree exceeded the cap.
  std::vector<std::pair<std::size_t, std::size_t>> skipped;
};

// Decides whether the ideal of the invariant ring S generated by `gens` is
// closed under all P^i, testing degrees up to degree_cap. Each generator must
// be homogeneous and G-invariant. Inconclusive when some required degree
// exceeds the cap and no violation was found below it.
PStarCheck is_pstar_invariant(const std::vector<Polynomial>& gens,
                              InvariantBasisCache& cache, int degree_cap);

}  // namespace modinv
