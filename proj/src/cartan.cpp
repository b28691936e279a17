#include "modinv/cartan.hpp"

#include <stdexcept>

namespace modinv {

Fraction::Fraction(Polynomial num, Polynomial base, int exp)
    : num_(std::move(num)), base_(std::move(base)), exp_(exp) {
  if (!num_.ring()->same_ring(*base_.ring()))
    throw std::invalid_argument("numerator and base rings differ");
  if (base_.is_zero()) throw std::invalid_argument("base must be nonzero");
  if (!base_.is_homogeneous())
    throw std::invalid_argument("base must be homogeneous");
  if (exp_ < 0) throw std::invalid_argument("exponent must be >= 0");
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0) {
    auto quotient = num_.divided_exactly_by(base_);
    if (!quotient.has_value()) break;
    num_ = std::move(*quotient);
    --exp_;
  }
}

std::optional<int> Fraction::degree() const {
  if (num_.is_zero() || !num_.is_homogeneous()) return std::nullopt;
  return num_.total_degree() - exp_ * base_.total_degree();
}

Fraction Fraction::operator-() const { return Fraction(-num_, base_, exp_); }

namespace {

void require_same_base(const Fraction& a, const Fraction& b) {
  if (a.base() != b.base())
    throw std::invalid_argument("fractions live in different localizations");
}

}  // namespace

Fraction operator+(const Fraction& a, const Fraction& b) {
  require_same_base(a, b);
  const int m = std::max(a.exp(), b.exp());
  const Polynomial na =
      a.num() * a.base().pow(static_cast<unsigned>(m - a.exp()));
  const Polynomial nb =
      b.num() * b.base().pow(static_cast<unsigned>(m - b.exp()));
  return Fraction(na + nb, a.base(), m);
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Polynomial& s, const Fraction& u) {
  return Fraction(s * u.num(), u.base(), u.exp());
}

Fraction Fraction::scaled(FieldCode c) const {
  return Fraction(num_.scaled(c), base_, exp_);
}

bool operator==(const Fraction& a, const Fraction& b) {
  require_same_base(a, b);
  const Polynomial lhs =
      a.num() * a.base().pow(static_cast<unsigned>(b.exp()));
  const Polynomial rhs =
      b.num() * b.base().pow(static_cast<unsigned>(a.exp()));
  return lhs == rhs;
}

bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

std::string Fraction::to_string() const {
  if (exp_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + base_.to_string() + ")^" +
         std::to_string(exp_);
}

Fraction make_invariant_fraction(const Group& G, Polynomial num,
                                 Polynomial base, int exp) {
  if (!is_invariant(G, num))
    throw std::invalid_argument("numerator is not G-invariant");
  if (!is_invariant(G, base))
    throw std::invalid_argument("base is not G-invariant");
  return Fraction(std::move(num), std::move(base), exp);
}

std::vector<Fraction> q_tower_from_representation(const Polynomial& num,
                                                  const Polynomial& base,
                                                  int exp, int r_max) {
  if (r_max < 0) throw std::invalid_argument("r_max must be >= 0");
  const Polynomial base_power = base.pow(static_cast<unsigned>(exp));
  const TotalSteenrod p_num = steenrod_total(num);
  const TotalSteenrod p_base = steenrod_total(base_power);

  std::vector<Fraction> res;
  res.reserve(static_cast<std::size_t>(r_max) + 1);
  res.emplace_back(num, base, exp);
  for (int r = 1; r <= r_max; ++r) {
    Fraction acc(p_num.coefficient(static_cast<std::size_t>(r)), base, 0);
    for (int j = 0; j < r; ++j) {
      const Polynomial pi = p_base.coefficient(static_cast<std::size_t>(r - j));
      if (pi.is_zero()) continue;
      acc = acc - pi * res[static_cast<std::size_t>(j)];
    }
    res.emplace_back(acc.num(), base, acc.exp() + exp);
  }
  return res;
}

std::vector<Fraction> q_tower(const Fraction& u, int r_max) {
  return q_tower_from_representation(u.num(), u.base(), u.exp(), r_max);
}

Fraction q_r(int r, const Fraction& u) {
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  return q_tower(u, r).back();
}

Fraction map_to(const Fraction& u, const Polynomial& y) {
  if (!y.ring()->same_ring(*u.ring()))
    throw std::invalid_argument("ring mismatch");
  if (y.is_zero()) throw std::invalid_argument("y must be nonzero");
  if (!y.is_homogeneous()) throw std::invalid_argument("y must be homogeneous");
  const Polynomial new_base = u.base() * y;
  const Polynomial new_num =
      u.num() * y.pow(static_cast<unsigned>(u.exp()));
  return Fraction(new_num, new_base, u.exp());
}

CartanAxiomReport verify_cartan_axiom(const Polynomial& s, const Fraction& u,
                                      int r_max) {
  const auto tower_su = q_tower(s * u, r_max);
  const auto tower_u = q_tower(u, r_max);
  const TotalSteenrod p_s = steenrod_total(s);
  for (int r = 0; r <= r_max; ++r) {
    Fraction rhs(Polynomial::zero(u.ring()), u.base(), 0);
    for (int i = 0; i <= r; ++i) {
      const Polynomial pi = p_s.coefficient(static_cast<std::size_t>(i));
      if (pi.is_zero()) continue;
      rhs = rhs + pi * tower_u[static_cast<std::size_t>(r - i)];
    }
    if (tower_su[static_cast<std::size_t>(r)] != rhs)
      return CartanAxiomReport{false, r};
  }
  return CartanAxiomReport{true, -1};
}

}  // namespace modinv
