#pragma once

#include <cstdint>
#include <vector>

#include "modinv/poly.hpp"

namespace modinv {

// The Dickson algebra D(d) over GF(q): the invariants of the full general
// linear group, a polynomial algebra on generators[i] = d_{d,i} of degree
// q^d - q^i for i = 0..d-1.
struct DicksonAlgebra {
  PolyRingPtr ring;
  std::vector<Polynomial> generators;
};

std::int64_t dickson_degree(std::uint64_t q, int d, int i);

// Construction by the root product: prod_{v in V} (X - v) over all q^d linear
// forms v equals X^{q^d} + sum_i (-1)^{d-i} d_{d,i} X^{q^i}. Throws
// std::runtime_error if q^d > point_cap.
DicksonAlgebra dickson_by_roots(const FieldSpecPtr& field, int d,
                                std::uint64_t point_cap = 4096);

// Construction by Moore determinant ratios: d_{d,i} = det M_i / det M, where
// M has rows x_j^(q^k) for k = 0..d-1 and M_i uses the exponents
// q^0..q^d with q^i omitted, in increasing order.
DicksonAlgebra dickson_by_moore(const FieldSpecPtr& field, int d,
                                std::uint64_t point_cap = 4096);

// Generators of the chain ideal (d_{d,0}, ..., d_{d,i}), 0 <= i < d.
std::vector<Polynomial> pstar_prime_chain(const DicksonAlgebra& algebra, int i);

}  // namespace modinv
