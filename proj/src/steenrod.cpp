#include "modinv/steenrod.hpp"

#include <stdexcept>

namespace modinv {

std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  while (k > 0 || n > 0) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // C(nd, kd) for digits < p, via the multiplicative formula.
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= kd; ++i) {
      c = c * (nd - kd + i) / i;
    }
    out = out * (c % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(out);
}

TotalSteenrod::TotalSteenrod(PolyRingPtr ring, std::vector<Polynomial> coefficients)
    : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
  if (!ring_) throw std::invalid_argument("null ring");
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial TotalSteenrod::coefficient(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return Polynomial::zero(ring_);
}

TotalSteenrod steenrod_total(const Polynomial& f) {
  const PolyRingPtr& ring = f.ring();
  const auto field = ring->field();
  const std::uint32_t p = field->p();
  const std::uint64_t q = field->q();
  const int d = ring->nvars();

  const int deg = f.total_degree();
  std::vector<Polynomial> res(static_cast<std::size_t>(std::max(deg, 0)) + 1,
                              Polynomial::zero(ring));
  // P(xi)(x^e) = prod_i (x_i + x_i^q xi)^{e_i}: convolve the per-variable
  // binomial expansions, term by term.
  for (const auto& t : f.terms()) {
    std::vector<Polynomial> cur = {Polynomial::constant(ring, t.coeff)};
    for (int i = 0; i < d; ++i) {
      const int e = t.exp[i];
      if (e == 0) continue;
      std::vector<Polynomial> next(cur.size() + static_cast<std::size_t>(e),
                                   Polynomial::zero(ring));
      for (int k = 0; k <= e; ++k) {
        const FieldCode c = field->from_int(binomial_mod_p(
            static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(k), p));
        if (c == 0) continue;
        Exponents mono(d, 0);
        mono[i] = e + k * static_cast<int>(q - 1);
        const Polynomial factor = Polynomial::monomial(ring, std::move(mono), c);
        for (std::size_t j = 0; j < cur.size(); ++j) {
          if (cur[j].is_zero()) continue;
          next[j + static_cast<std::size_t>(k)] += cur[j] * factor;
        }
      }
      cur = std::move(next);
    }
    for (std::size_t k = 0; k < cur.size(); ++k) res[k] += cur[k];
  }
  return TotalSteenrod(ring, std::move(res));
}

Polynomial steenrod_power(std::size_t i, const Polynomial& f) {
  // Degree reasoning makes most powers free: P^i vanishes beyond the degree.
  if (i > static_cast<std::size_t>(std::max(f.total_degree(), 0)))
    return Polynomial::zero(f.ring());
  return steenrod_total(f).coefficient(i);
}

PStarCheck is_pstar_invariant(const std::vector<Polynomial>& gens,
                              InvariantBasisCache& cache, int degree_cap) {
  const Group& G = cache.group();
  const PolyRingPtr& ring = G.ring();
  const auto field = ring->field();
  const std::uint64_t q = field->q();

  for (const auto& f : gens) {
    if (!f.ring()->same_ring(*ring))
      throw std::invalid_argument("generator ring does not match the group");
    if (!f.is_homogeneous())
      throw std::invalid_argument("ideal generators must be homogeneous");
    if (!is_invariant(G, f))
      throw std::invalid_argument("ideal generators must be G-invariant");
  }

  PStarCheck out{PStarStatus::invariant, std::nullopt, {}};
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Polynomial& f = gens[gi];
    if (f.is_zero()) continue;
    const int deg = f.total_degree();
    const TotalSteenrod total = steenrod_total(f);
    for (std::size_t i = 1; i <= static_cast<std::size_t>(deg); ++i) {
      const int m = deg + static_cast<int>(i) * static_cast<int>(q - 1);
      if (m > degree_cap) {
        out.skipped.emplace_back(gi, i);
        continue;
      }
      const Polynomial value = total.coefficient(i);
      if (value.is_zero()) continue;

      // Degree-m piece of the ideal: sum over generators f_k of S_{m-deg f_k} * f_k.
      MonomialBasis mono(ring, m);
      std::vector<std::vector<FieldCode>> cols;
      for (const auto& g : gens) {
        if (g.is_zero()) continue;
        const int rest = m - g.total_degree();
        if (rest < 0) continue;
        for (const auto& h : cache.get(rest).basis)
          cols.push_back(mono.coords_of(h * g));
      }
      const MatrixGF a = MatrixGF::from_columns(field, mono.size(), cols);
      const MatrixGF b =
          MatrixGF::from_columns(field, mono.size(), {mono.coords_of(value)});
      if (!a.solve(b).has_value()) {
        out.status = PStarStatus::not_invariant;
        out.witness = PStarWitness{gi, i, value};
        return out;
      }
    }
  }
  if (!out.skipped.empty()) out.status = PStarStatus::inconclusive;
  return out;
}

}  // namespace modinv
