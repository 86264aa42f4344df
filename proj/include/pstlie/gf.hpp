#pragma once

// Finite fields F_q (q odd prime power) and the quadratic tower F_q ⊂ F_{q²}.
//
// Elements are stored in polynomial form: the code of c_0 + c_1 x + ... +
// c_{k-1} x^{k-1} is Σ c_i p^i. Multiplication goes through discrete-log
// tables built once at construction; addition is digit-wise mod p.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pstlie {

struct FieldElement {
  std::uint32_t code = 0;

  constexpr bool is_zero() const { return code == 0; }
  friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class FiniteField {
 public:
  /// Field of order p^k with the lowest irreducible monic modulus (smallest
  /// integer encoding of the low coefficients) and the smallest primitive
  /// element as generator.
  FiniteField(std::uint32_t p, std::uint32_t k);

  /// Same modulus rule, but with a caller-chosen primitive element.
  FiniteField(std::uint32_t p, std::uint32_t k, FieldElement generator);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  std::uint32_t unit_order() const { return q_ - 1; }

  /// Monic modulus, coefficients from x^0 up to x^k.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement generator() const { return generator_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement minus_one() const { return {p_ - 1}; }
  FieldElement from_int(std::int64_t v) const;
  FieldElement element(std::uint32_t code) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::int64_t e) const;

  /// Discrete log to base generator(), in [0, q-2]. Throws on zero.
  std::uint32_t log(FieldElement a) const;
  /// generator()^e for any integer e.
  FieldElement exp(std::int64_t e) const;

  FieldElement frobenius(FieldElement a) const { return pow(a, p_); }
  bool is_square(FieldElement a) const;
  /// The square root with the smaller discrete log, if one exists.
  std::optional<FieldElement> sqrt(FieldElement a) const;
  std::uint32_t multiplicative_order(FieldElement a) const;

  /// Absolute trace to the prime field, returned as an integer in [0, p).
  std::uint32_t absolute_trace(FieldElement a) const;

  std::string to_string(FieldElement a) const;
  std::string modulus_string() const;

 private:
  void build_tables(std::optional<FieldElement> forced_generator);
  std::vector<std::uint32_t> digits(std::uint32_t code) const;
  std::uint32_t encode(const std::vector<std::uint32_t>& digits) const;
  std::uint32_t poly_mul_code(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  FieldElement generator_;
  std::vector<std::uint32_t> log_;  // indexed by code; log_[0] unused
  std::vector<std::uint32_t> exp_;  // indexed by exponent in [0, q-1)
};

bool is_prime(std::uint64_t n);

/// F_q ⊂ F_{q²} with a fixed embedding. The base generator is chosen as the
/// preimage of ext.generator()^{q+1}, so that ext.log(embed(x)) equals
/// (q+1)·base.log(x) for every nonzero x.
class FieldTower {
 public:
  FieldTower(std::shared_ptr<const FiniteField> base, std::shared_ptr<const FiniteField> ext,
             std::vector<FieldElement> embedding);

  const FiniteField& base() const { return *base_; }
  const FiniteField& ext() const { return *ext_; }
  std::shared_ptr<const FiniteField> base_ptr() const { return base_; }
  std::shared_ptr<const FiniteField> ext_ptr() const { return ext_; }

  std::uint32_t q() const { return base_->order(); }
  std::uint32_t q2() const { return ext_->order(); }

  FieldElement embed(FieldElement x) const { return embedding_[x.code]; }
  /// Inverse of embed on its image.
  std::optional<FieldElement> restrict(FieldElement z) const;
  bool in_base(FieldElement z) const { return restrict(z).has_value(); }

  /// The smallest non-square of F_q by discrete log.
  FieldElement delta() const { return delta_; }
  /// Root of t² - Δ in F_{q²} with the smaller discrete log.
  FieldElement sqrt_delta() const { return sqrt_delta_; }

  /// Nm(z) = z^{q+1}, returned in F_q.
  FieldElement norm(FieldElement z) const;
  /// z ↦ z^q on F_{q²}.
  FieldElement conj(FieldElement z) const { return ext_->pow(z, q()); }
  /// E_x = Nm^{-1}(x), sorted by code. Throws on x = 0.
  std::vector<FieldElement> norm_fiber(FieldElement x) const;
  /// F_x = {z : z^{1-q} = x}, for x in the norm-one subgroup E.
  std::vector<FieldElement> twist_fiber(FieldElement x) const;
  bool in_norm_one(FieldElement z) const;

  /// Coordinates (x, y) ∈ F_q² with z = x + y·√Δ.
  std::pair<FieldElement, FieldElement> coordinates(FieldElement z) const;

 private:
  std::shared_ptr<const FiniteField> base_;
  std::shared_ptr<const FiniteField> ext_;
  std::vector<FieldElement> embedding_;
  std::vector<std::int64_t> restriction_;  // ext code -> base code or -1
  FieldElement delta_;
  FieldElement sqrt_delta_;
};

/// Builds F_{p^k} ⊂ F_{p^{2k}}. Rejects p = 2 and non-prime p.
FieldTower make_tower(std::uint32_t p, std::uint32_t k);
/// Tower for q given as a prime power.
FieldTower make_tower_for_order(std::uint32_t q);

}  // namespace pstlie
