#pragma once

#include <random>

#include "modinv/poly.hpp"

namespace modinv::testutil {

// Random polynomial of total degree <= max_deg with a few terms.
inline Polynomial random_poly(const PolyRingPtr& ring, int max_deg,
                              std::mt19937& rng, int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<FieldCode> coeff(
      0, static_cast<FieldCode>(ring->field()->q() - 1));
  std::vector<Term> terms;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exponents e(ring->nvars(), 0);
    int budget = deg(rng);
    for (int i = 0; i < ring->nvars(); ++i) {
      std::uniform_int_distribution<int> part(0, budget);
      e[i] = part(rng);
      budget -= e[i];
    }
    terms.push_back({std::move(e), coeff(rng)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

// Random homogeneous polynomial of exact degree n (possibly zero).
inline Polynomial random_homogeneous(const PolyRingPtr& ring, int n,
                                     std::mt19937& rng) {
  MonomialBasis basis(ring, n);
  std::uniform_int_distribution<FieldCode> coeff(
      0, static_cast<FieldCode>(ring->field()->q() - 1));
  std::vector<FieldCode> coords(basis.size());
  for (auto& c : coords) c = coeff(rng);
  return basis.from_coords(coords);
}

}  // namespace modinv::testutil
