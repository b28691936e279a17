#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace modinv {

// Code of a field element: the integer c_0 + c_1*p + ... + c_{s-1}*p^{s-1}
// formed from its coefficient vector over GF(p). Always in [0, q).
using FieldCode = std::uint32_t;

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

// Arithmetic context for GF(p^s) = GF(p)[t]/(modulus). Immutable after
// construction; element-level operations work on codes so containers can
// store plain integers.
class FieldSpec {
public:
  // modulus: monic irreducible of degree s over GF(p), coefficients
  // low-degree-first, length s+1, entries in [0, p). Throws
  // std::invalid_argument if p is not prime, s < 1, or the modulus is not a
  // monic irreducible of degree s.
  static FieldSpecPtr create(std::uint32_t p, std::uint32_t s,
                             std::vector<std::uint32_t> modulus);

  // Default modulus: t for s = 1, otherwise a fixed table of Conway-style
  // irreducibles covering every prime power q = p^s <= 64.
  static FieldSpecPtr create(std::uint32_t p, std::uint32_t s);

  std::uint32_t p() const { return p_; }
  std::uint32_t s() const { return s_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // Structural equality: same p, s and modulus.
  bool same_field(const FieldSpec& other) const;

  FieldCode zero() const { return 0; }
  FieldCode one() const { return 1; }

  FieldCode add(FieldCode a, FieldCode b) const;
  FieldCode sub(FieldCode a, FieldCode b) const;
  FieldCode neg(FieldCode a) const;
  FieldCode mul(FieldCode a, FieldCode b) const;
  // Throws std::domain_error on zero.
  FieldCode inv(FieldCode a) const;
  FieldCode pow(FieldCode a, std::uint64_t e) const;
  FieldCode frobenius(FieldCode a) const { return pow(a, p_); }
  // n mod p embedded as a constant.
  FieldCode from_int(std::int64_t n) const;

  std::vector<std::uint32_t> coeffs(FieldCode a) const;
  // Validates length s and entries in [0, p).
  FieldCode code_of(const std::vector<std::uint32_t>& coeffs) const;

  // Canonical textual form: the coefficient vector, low-degree-first.
  std::string to_string(FieldCode a) const;

private:
  FieldSpec(std::uint32_t p, std::uint32_t s, std::vector<std::uint32_t> modulus);
  FieldCode mul_generic(FieldCode a, FieldCode b) const;
  FieldCode add_generic(FieldCode a, FieldCode b) const;

  std::uint32_t p_ = 0;
  std::uint32_t s_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  // reduction_[k][j]: coefficient of t^j in t^(s+k) mod modulus, k = 0..s-2.
  std::vector<std::vector<std::uint32_t>> reduction_;
  bool tables_ = false;
  std::vector<FieldCode> add_tab_, mul_tab_, inv_tab_;
};

// A field element bound to its FieldSpec. Arithmetic between elements of
// structurally different fields throws std::invalid_argument.
class FieldElement {
public:
  FieldElement(FieldSpecPtr spec, FieldCode code);
  static FieldElement from_coeffs(FieldSpecPtr spec,
                                  const std::vector<std::uint32_t>& coeffs);

  const FieldSpecPtr& spec() const { return spec_; }
  FieldCode code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  std::vector<std::uint32_t> coeffs() const { return spec_->coeffs(code_); }

  FieldElement inverse() const;
  FieldElement frobenius() const;
  FieldElement pow(std::uint64_t e) const;
  std::string to_string() const { return spec_->to_string(code_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  // Elements of structurally different fields compare unequal.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b);

private:
  FieldSpecPtr spec_;
  FieldCode code_;
};

// All q elements in deterministic order: increasing code, i.e. coefficient
// vectors ordered with c_{s-1} most significant. First is 0, second is 1.
std::vector<FieldElement> enumerate_field(const FieldSpecPtr& spec);

}  // namespace modinv
