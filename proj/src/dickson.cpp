#include "modinv/dickson.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace modinv {

namespace {

std::uint64_t checked_point_count(const FieldSpecPtr& field, int d,
                                  std::uint64_t point_cap) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= field->q();
    if (count > point_cap)
      throw std::runtime_error("q^d = " + std::to_string(count) +
                               "+ exceeds the point cap of " +
                               std::to_string(point_cap));
  }
  return count;
}

std::vector<std::string> var_names(int d, bool with_extra) {
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
  if (with_extra) names.push_back("X");
  return names;
}

// det of a small polynomial matrix by permutation expansion.
Polynomial poly_det(const PolyRingPtr& ring,
                    const std::vector<std::vector<Polynomial>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  auto out = Polynomial::zero(ring);
  const FieldCode minus_one = ring->field()->from_int(-1);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
          ++inversions;
    auto prod = Polynomial::constant(
        ring, inversions % 2 == 0 ? 1 : minus_one);
    for (int k = 0; k < n; ++k)
      prod = prod * m[static_cast<std::size_t>(k)]
                     [static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
    out += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::int64_t dickson_degree(std::uint64_t q, int d, int i) {
  if (i < 0 || i >= d) throw std::invalid_argument("index out of range");
  std::int64_t qd = 1, qi = 1;
  for (int k = 0; k < d; ++k) qd *= static_cast<std::int64_t>(q);
  for (int k = 0; k < i; ++k) qi *= static_cast<std::int64_t>(q);
  return qd - qi;
}

DicksonAlgebra dickson_by_roots(const FieldSpecPtr& field, int d,
                                std::uint64_t point_cap) {
  const std::uint64_t count = checked_point_count(field, d, point_cap);
  const std::uint64_t q = field->q();
  auto ring = PolyRing::create(field, var_names(d, false));
  auto ext = PolyRing::create(field, var_names(d, true));

  // prod over all q^d linear forms v of (X - v), v = 0 included.
  auto product = Polynomial::constant(ext, 1);
  const FieldCode minus_one = field->from_int(-1);
  for (std::uint64_t codevec = 0; codevec < count; ++codevec) {
    std::vector<Term> terms;
    Exponents ex(d + 1, 0);
    ex[d] = 1;
    terms.push_back({ex, 1});
    std::uint64_t rest = codevec;
    for (int j = 0; j < d; ++j) {
      const FieldCode c = static_cast<FieldCode>(rest % q);
      rest /= q;
      if (c != 0) {
        Exponents ej(d + 1, 0);
        ej[j] = 1;
        terms.push_back({std::move(ej), field->mul(minus_one, c)});
      }
    }
    product = product * Polynomial::from_terms(ext, std::move(terms));
  }

  // Split by the exponent of X; only exponents q^0..q^d may occur.
  std::vector<std::int64_t> qpow(static_cast<std::size_t>(d) + 1, 1);
  for (int i = 1; i <= d; ++i)
    qpow[static_cast<std::size_t>(i)] = qpow[static_cast<std::size_t>(i - 1)] *
                                        static_cast<std::int64_t>(q);
  std::vector<Polynomial> coeff(static_cast<std::size_t>(d) + 1,
                                Polynomial::zero(ring));
  for (const auto& t : product.terms()) {
    const std::int64_t xe = t.exp[static_cast<std::size_t>(d)];
    const auto it = std::find(qpow.begin(), qpow.end(), xe);
    if (it == qpow.end())
      throw std::logic_error("root product has an X-exponent that is not q^i");
    Exponents base(t.exp.begin(), t.exp.begin() + d);
    coeff[static_cast<std::size_t>(it - qpow.begin())] +=
        Polynomial::monomial(ring, std::move(base), t.coeff);
  }
  if (coeff[static_cast<std::size_t>(d)] != Polynomial::constant(ring, 1))
    throw std::logic_error("root product is not monic in X^(q^d)");

  DicksonAlgebra out{ring, {}};
  for (int i = 0; i < d; ++i) {
    // d_{d,i} = (-1)^{d-i} * coefficient of X^{q^i}.
    FieldCode sign = 1;
    for (int k = 0; k < d - i; ++k) sign = field->mul(sign, minus_one);
    out.generators.push_back(coeff[static_cast<std::size_t>(i)].scaled(sign));
  }
  return out;
}

DicksonAlgebra dickson_by_moore(const FieldSpecPtr& field, int d,
                                std::uint64_t point_cap) {
  checked_point_count(field, d, point_cap);
  const std::uint64_t q = field->q();
  auto ring = PolyRing::create(field, var_names(d, false));

  auto moore_matrix = [&](const std::vector<std::uint64_t>& row_exps) {
    std::vector<std::vector<Polynomial>> m;
    for (std::uint64_t e : row_exps) {
      std::vector<Polynomial> row;
      for (int j = 0; j < d; ++j) {
        Exponents ex(d, 0);
        ex[j] = static_cast<int>(e);
        row.push_back(Polynomial::monomial(ring, std::move(ex), 1));
      }
      m.push_back(std::move(row));
    }
    return m;
  };

  std::vector<std::uint64_t> qpow(static_cast<std::size_t>(d) + 1, 1);
  for (int i = 1; i <= d; ++i)
    qpow[static_cast<std::size_t>(i)] = qpow[static_cast<std::size_t>(i - 1)] * q;

  std::vector<std::uint64_t> base_exps(qpow.begin(), qpow.begin() + d);
  const Polynomial delta = poly_det(ring, moore_matrix(base_exps));

  DicksonAlgebra out{ring, {}};
  for (int i = 0; i < d; ++i) {
    std::vector<std::uint64_t> exps;
    for (int k = 0; k <= d; ++k)
      if (k != i) exps.push_back(qpow[static_cast<std::size_t>(k)]);
    const Polynomial delta_i = poly_det(ring, moore_matrix(exps));
    auto quotient = delta_i.divided_exactly_by(delta);
    if (!quotient.has_value())
      throw std::logic_error("Moore determinant ratio is not a polynomial");
    out.generators.push_back(std::move(*quotient));
  }
  return out;
}

std::vector<Polynomial> pstar_prime_chain(const DicksonAlgebra& algebra, int i) {
  const int d = static_cast<int>(algebra.generators.size());
  if (i < 0 || i >= d)
    throw std::invalid_argument("chain index must satisfy 0 <= i < d");
  return std::vector<Polynomial>(algebra.generators.begin(),
                                 algebra.generators.begin() + i + 1);
}

}  // namespace modinv
