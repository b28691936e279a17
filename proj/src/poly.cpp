#include "modinv/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace modinv {

PolyRing::PolyRing(FieldSpecPtr field, std::vector<std::string> names)
    : field_(std::move(field)),
      nvars_(static_cast<int>(names.size())),
      names_(std::move(names)) {
  if (!field_) throw std::invalid_argument("null field spec");
  if (nvars_ < 1) throw std::invalid_argument("ring needs at least one variable");
}

PolyRingPtr PolyRing::create(FieldSpecPtr field, int nvars) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(std::max(nvars, 0)));
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return PolyRingPtr(new PolyRing(std::move(field), std::move(names)));
}

PolyRingPtr PolyRing::create(FieldSpecPtr field, std::vector<std::string> names) {
  return PolyRingPtr(new PolyRing(std::move(field), std::move(names)));
}

// Variable names are display-only and do not affect ring identity.
bool PolyRing::same_ring(const PolyRing& other) const {
  return nvars_ == other.nvars_ && field_->same_field(*other.field_);
}

int grevlex_cmp(const Exponents& a, const Exponents& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grevlex_cmp(a, b) > 0;
  }
};

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!f.ring()->same_ring(*g.ring()))
    throw std::invalid_argument("ring mismatch");
}

void check_exponents(const PolyRing& ring, const Exponents& exp) {
  if (static_cast<int>(exp.size()) != ring.nvars())
    throw std::invalid_argument("exponent vector has wrong length");
  for (int e : exp)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

}  // namespace

Polynomial::Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
}

Polynomial Polynomial::constant(PolyRingPtr ring, FieldCode c) {
  Exponents e(ring->nvars(), 0);
  return monomial(std::move(ring), std::move(e), c);
}

Polynomial Polynomial::variable(PolyRingPtr ring, int i) {
  if (i < 0 || i >= ring->nvars())
    throw std::invalid_argument("variable index out of range");
  Exponents e(ring->nvars(), 0);
  e[i] = 1;
  return monomial(std::move(ring), std::move(e), 1);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, Exponents exp, FieldCode c) {
  Polynomial f(std::move(ring));
  check_exponents(*f.ring_, exp);
  if (c >= f.ring_->field()->q())
    throw std::invalid_argument("coefficient code out of range");
  if (c != 0) f.terms_.push_back({std::move(exp), c});
  return f;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  for (const auto& t : terms) {
    check_exponents(*f.ring_, t.exp);
    if (t.coeff >= f.ring_->field()->q())
      throw std::invalid_argument("coefficient code out of range");
  }
  f.terms_ = std::move(terms);
  f.normalize();
  return f;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grevlex_cmp(a.exp, b.exp) > 0; });
  const auto& field = *ring_->field();
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exp == t.exp)
      merged.back().coeff = field.add(merged.back().coeff, t.coeff);
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.coeff == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& t : terms_) {
    int d = 0;
    for (int e : t.exp) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d0 = -1;
  for (const auto& t : terms_) {
    int d = 0;
    for (int e : t.exp) d += e;
    if (d0 < 0) d0 = d;
    if (d != d0) return false;
  }
  return true;
}

bool Polynomial::is_homogeneous_of_degree(int n) const {
  for (const auto& t : terms_) {
    int d = 0;
    for (int e : t.exp) d += e;
    if (d != n) return false;
  }
  return true;
}

Polynomial Polynomial::homogeneous_component(int n) const {
  Polynomial out(ring_);
  for (const auto& t : terms_) {
    int d = 0;
    for (int e : t.exp) d += e;
    if (d == n) out.terms_.push_back(t);
  }
  return out;
}

FieldCode Polynomial::coefficient(const Exponents& exp) const {
  for (const auto& t : terms_)
    if (t.exp == exp) return t.coeff;
  return 0;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_ = terms_;
  const auto& field = *ring_->field();
  for (auto& t : out.terms_) t.coeff = field.neg(t.coeff);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same_ring(*this, g);
  terms_.insert(terms_.end(), g.terms_.begin(), g.terms_.end());
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) { return *this += -g; }

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  Polynomial out = f;
  out += g;
  return out;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  Polynomial out = f;
  out -= g;
  return out;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  const auto& field = *f.ring()->field();
  const int d = f.ring()->nvars();
  std::map<Exponents, FieldCode, GrevlexLess> acc;
  Exponents e(d);
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      for (int i = 0; i < d; ++i) e[i] = a.exp[i] + b.exp[i];
      auto [it, inserted] = acc.try_emplace(e, 0);
      it->second = field.add(it->second, field.mul(a.coeff, b.coeff));
    }
  }
  Polynomial out(f.ring());
  out.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) out.terms_.push_back({it->first, it->second});
  return out;
}

Polynomial Polynomial::scaled(FieldCode c) const {
  const auto& field = *ring_->field();
  if (c >= field.q()) throw std::invalid_argument("coefficient code out of range");
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff = field.mul(t.coeff, c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = Polynomial::constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    if (e >>= 1) base = base * base;
  }
  return out;
}

std::optional<Polynomial> Polynomial::divided_exactly_by(const Polynomial& g) const {
  require_same_ring(*this, g);
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const auto& field = *ring_->field();
  const int d = ring_->nvars();
  const Term& lg = g.leading_term();
  const FieldCode lg_inv = field.inv(lg.coeff);
  Polynomial r = *this;
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    Exponents e(d);
    for (int i = 0; i < d; ++i) {
      e[i] = lr.exp[i] - lg.exp[i];
      if (e[i] < 0) return std::nullopt;
    }
    const FieldCode c = field.mul(lr.coeff, lg_inv);
    quotient.push_back({e, c});
    r -= Polynomial::monomial(ring_, std::move(e), c) * g;
  }
  return Polynomial::from_terms(ring_, std::move(quotient));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  const int d = ring_->nvars();
  if (static_cast<int>(images.size()) != d)
    throw std::invalid_argument("substitute needs one image per variable");
  const PolyRingPtr target = images[0].ring();
  for (const auto& im : images)
    if (!im.ring()->same_ring(*target))
      throw std::invalid_argument("substitution images live in different rings");
  if (!target->field()->same_field(*ring_->field()))
    throw std::invalid_argument("substitution must preserve the coefficient field");

  // Memoized powers of each image.
  std::vector<std::vector<Polynomial>> powers(d);
  for (int i = 0; i < d; ++i) powers[i].push_back(Polynomial::constant(target, 1));

  Polynomial out(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (int i = 0; i < d; ++i) {
      const int e = t.exp[i];
      while (static_cast<int>(powers[i].size()) <= e)
        powers[i].push_back(powers[i].back() * images[i]);
      if (e > 0) prod = prod * powers[i][e];
    }
    out += prod;
  }
  return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!f.ring()->same_ring(*g.ring())) return false;
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (f.terms_[i].exp != g.terms_[i].exp || f.terms_[i].coeff != g.terms_[i].coeff)
      return false;
  return true;
}

bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& field = *ring_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool is_const = true;
    for (int e : t.exp) is_const &= (e == 0);
    if (t.coeff != 1 || is_const) {
      os << field.to_string(t.coeff);
      if (!is_const) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->var_names()[i];
      if (t.exp[i] > 1) os << "^" << t.exp[i];
    }
  }
  return os.str();
}

namespace {

void gen_monomials(int nvars, int var, int remaining, Exponents& cur,
                   std::vector<Exponents>& out) {
  if (var == nvars - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    gen_monomials(nvars, var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponents> monomial_basis(const PolyRingPtr& ring, int degree) {
  std::vector<Exponents> out;
  if (!ring) throw std::invalid_argument("null ring");
  if (degree < 0) return out;
  Exponents cur(ring->nvars(), 0);
  gen_monomials(ring->nvars(), 0, degree, cur, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

MonomialBasis::MonomialBasis(PolyRingPtr ring, int degree)
    : ring_(std::move(ring)), degree_(degree),
      exponents_(monomial_basis(ring_, degree)) {}

int MonomialBasis::index_of(const Exponents& exp) const {
  auto it = std::lower_bound(exponents_.begin(), exponents_.end(), exp,
                             GrevlexGreater{});
  if (it == exponents_.end() || *it != exp) return -1;
  return static_cast<int>(it - exponents_.begin());
}

std::vector<FieldCode> MonomialBasis::coords_of(const Polynomial& f) const {
  if (!f.ring()->same_ring(*ring_)) throw std::invalid_argument("ring mismatch");
  std::vector<FieldCode> out(exponents_.size(), 0);
  for (const auto& t : f.terms()) {
    const int idx = index_of(t.exp);
    if (idx < 0)
      throw std::invalid_argument("polynomial is not homogeneous of degree " +
                                  std::to_string(degree_));
    out[static_cast<std::size_t>(idx)] = t.coeff;
  }
  return out;
}

Polynomial MonomialBasis::from_coords(std::span<const FieldCode> coords) const {
  if (coords.size() != exponents_.size())
    throw std::invalid_argument("coordinate vector has wrong length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) terms.push_back({exponents_[i], coords[i]});
  return Polynomial::from_terms(ring_, std::move(terms));
}

}  // namespace modinv
