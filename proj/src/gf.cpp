#include "modinv/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modinv {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), coefficients low-degree-first.
int poly_degree(const std::vector<std::uint32_t>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f by monic g.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> f,
                                    const std::vector<std::uint32_t>& g,
                                    std::uint32_t p) {
  const int dg = poly_degree(g);
  for (int i = poly_degree(f); i >= dg; i = poly_degree(f)) {
    const std::uint64_t c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      std::uint64_t v = f[i - dg + j] + (p - g[j]) % p * c;
      f[i - dg + j] = static_cast<std::uint32_t>(v % p);
    }
  }
  return f;
}

bool poly_is_zero(const std::vector<std::uint32_t>& f) {
  return poly_degree(f) < 0;
}

// Trial division by every monic polynomial of degree 1..s/2.
bool is_irreducible(const std::vector<std::uint32_t>& modulus, std::uint32_t p,
                    std::uint32_t s) {
  for (std::uint32_t e = 1; 2 * e <= s; ++e) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> g(e + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < e; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[e] = 1;
      if (poly_is_zero(poly_rem(modulus, g, p))) return false;
    }
  }
  return true;
}

// Conway polynomials for 2 <= s, q = p^s <= 64, low-degree-first.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t s) {
  if (s == 1) return {0, 1};
  struct Entry {
    std::uint32_t p, s;
    std::vector<std::uint32_t> m;
  };
  static const std::vector<Entry> table = {
      {2, 2, {1, 1, 1}},          {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},    {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {3, 2, {2, 2, 1}},          {3, 3, {1, 2, 0, 1}},
      {5, 2, {2, 4, 1}},          {7, 2, {3, 6, 1}},
  };
  for (const auto& e : table)
    if (e.p == p && e.s == s) return e.m;
  throw std::invalid_argument(
      "no default modulus for p=" + std::to_string(p) + ", s=" +
      std::to_string(s) + " (table covers p^s <= 64); supply one explicitly");
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t s,
                     std::vector<std::uint32_t> modulus)
    : p_(p), s_(s), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("p must be prime");
  if (s_ < 1) throw std::invalid_argument("s must be >= 1");
  if (modulus_.size() != s_ + 1)
    throw std::invalid_argument("modulus must have length s+1");
  for (auto c : modulus_)
    if (c >= p_) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
  if (modulus_[s_] != 1) throw std::invalid_argument("modulus must be monic");
  if (!is_irreducible(modulus_, p_, s_))
    throw std::invalid_argument("modulus is reducible over GF(p)");

  q_ = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    q_ *= p_;
    if (q_ > (1ull << 31))
      throw std::invalid_argument("field too large: q must fit in 31 bits");
  }

  // t^(s+k) mod modulus for k = 0..s-2, used by generic multiplication.
  if (s_ >= 2) {
    std::vector<std::uint32_t> row(s_);
    for (std::uint32_t j = 0; j < s_; ++j) row[j] = (p_ - modulus_[j]) % p_;
    reduction_.push_back(row);
    for (std::uint32_t k = 1; k + 1 < s_; ++k) {
      std::vector<std::uint32_t> next(s_, 0);
      const std::uint32_t top = row[s_ - 1];
      for (std::uint32_t j = s_ - 1; j >= 1; --j) next[j] = row[j - 1];
      next[0] = 0;
      if (top != 0)
        for (std::uint32_t j = 0; j < s_; ++j)
          next[j] = (next[j] + top * reduction_[0][j]) % p_;
      reduction_.push_back(next);
      row = next;
    }
  }

  if (q_ <= 256) {
    const std::uint32_t q = static_cast<std::uint32_t>(q_);
    add_tab_.resize(static_cast<std::size_t>(q) * q);
    mul_tab_.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        add_tab_[static_cast<std::size_t>(a) * q + b] = add_generic(a, b);
        mul_tab_[static_cast<std::size_t>(a) * q + b] = mul_generic(a, b);
      }
    tables_ = true;
    inv_tab_.assign(q, 0);
    for (std::uint32_t a = 1; a < q; ++a) inv_tab_[a] = pow(a, q_ - 2);
  }
}

FieldSpecPtr FieldSpec::create(std::uint32_t p, std::uint32_t s,
                               std::vector<std::uint32_t> modulus) {
  return FieldSpecPtr(new FieldSpec(p, s, std::move(modulus)));
}

FieldSpecPtr FieldSpec::create(std::uint32_t p, std::uint32_t s) {
  return create(p, s, default_modulus(p, s));
}

bool FieldSpec::same_field(const FieldSpec& other) const {
  return p_ == other.p_ && s_ == other.s_ && modulus_ == other.modulus_;
}

FieldCode FieldSpec::add_generic(FieldCode a, FieldCode b) const {
  if (p_ == 2) return a ^ b;
  FieldCode out = 0, mult = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    out += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

FieldCode FieldSpec::add(FieldCode a, FieldCode b) const {
  if (tables_) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
  return add_generic(a, b);
}

FieldCode FieldSpec::neg(FieldCode a) const {
  if (p_ == 2) return a;
  FieldCode out = 0, mult = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    out += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

FieldCode FieldSpec::sub(FieldCode a, FieldCode b) const { return add(a, neg(b)); }

FieldCode FieldSpec::mul_generic(FieldCode a, FieldCode b) const {
  if (s_ == 1) return static_cast<FieldCode>(
      static_cast<std::uint64_t>(a) * b % p_);
  std::uint32_t da[16], db[16];
  std::uint64_t conv[31] = {0};
  for (std::uint32_t i = 0; i < s_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < s_; ++i)
    for (std::uint32_t j = 0; j < s_; ++j)
      conv[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
  for (int k = 2 * static_cast<int>(s_) - 2; k >= static_cast<int>(s_); --k) {
    const std::uint64_t c = conv[k] % p_;
    if (c == 0) continue;
    const auto& row = reduction_[k - s_];
    for (std::uint32_t j = 0; j < s_; ++j) conv[j] += c * row[j];
  }
  FieldCode out = 0, mult = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    out += static_cast<FieldCode>(conv[i] % p_) * mult;
    mult *= p_;
  }
  return out;
}

FieldCode FieldSpec::mul(FieldCode a, FieldCode b) const {
  if (tables_) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
  return mul_generic(a, b);
}

FieldCode FieldSpec::inv(FieldCode a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (tables_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

FieldCode FieldSpec::pow(FieldCode a, std::uint64_t e) const {
  FieldCode out = 1, base = a;
  while (e > 0) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

FieldCode FieldSpec::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<FieldCode>(r);
}

std::vector<std::uint32_t> FieldSpec::coeffs(FieldCode a) const {
  std::vector<std::uint32_t> out(s_);
  for (std::uint32_t i = 0; i < s_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

FieldCode FieldSpec::code_of(const std::vector<std::uint32_t>& c) const {
  if (c.size() != s_)
    throw std::invalid_argument("coefficient vector must have length s");
  FieldCode out = 0, mult = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    if (c[i] >= p_)
      throw std::invalid_argument("coefficient out of range [0, p)");
    out += c[i] * mult;
    mult *= p_;
  }
  return out;
}

std::string FieldSpec::to_string(FieldCode a) const {
  if (s_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << '[';
  const auto c = coeffs(a);
  for (std::uint32_t i = 0; i < s_; ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.spec()->same_field(*b.spec()))
    throw std::invalid_argument("field mismatch");
}

}  // namespace

FieldElement::FieldElement(FieldSpecPtr spec, FieldCode code)
    : spec_(std::move(spec)), code_(code) {
  if (!spec_) throw std::invalid_argument("null field spec");
  if (code_ >= spec_->q()) throw std::invalid_argument("element code out of range");
}

FieldElement FieldElement::from_coeffs(FieldSpecPtr spec,
                                       const std::vector<std::uint32_t>& c) {
  if (!spec) throw std::invalid_argument("null field spec");
  const FieldCode code = spec->code_of(c);
  return FieldElement(std::move(spec), code);
}

FieldElement FieldElement::inverse() const {
  return FieldElement(spec_, spec_->inv(code_));
}

FieldElement FieldElement::frobenius() const {
  return FieldElement(spec_, spec_->frobenius(code_));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  return FieldElement(spec_, spec_->pow(code_, e));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.spec_, a.spec_->add(a.code_, b.code_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.spec_, a.spec_->sub(a.code_, b.code_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.spec_, a.spec_->mul(a.code_, b.code_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.spec_, a.spec_->mul(a.code_, b.spec_->inv(b.code_)));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(spec_, spec_->neg(code_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.spec_->same_field(*b.spec_) && a.code_ == b.code_;
}

bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

std::vector<FieldElement> enumerate_field(const FieldSpecPtr& spec) {
  if (!spec) throw std::invalid_argument("null field spec");
  std::vector<FieldElement> out;
  out.reserve(spec->q());
  for (std::uint64_t c = 0; c < spec->q(); ++c)
    out.emplace_back(spec, static_cast<FieldCode>(c));
  return out;
}

}  // namespace modinv
