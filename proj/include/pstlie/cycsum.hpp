#pragma once

// Exact sums of roots of unity and multiplicative characters of cyclic groups.

#include <complex>
#include <cstdint>
#include <vector>

namespace pstlie {

/// Σ_a c_a ζ_n^a with integer coefficients, ζ_n = exp(2πi/n). Values of
/// different orders can be mixed freely; the result lives at the lcm.
class CycSum {
 public:
  CycSum() : n_(1), c_(1, 0) {}
  explicit CycSum(std::uint32_t n);

  static CycSum integer(std::int64_t v, std::uint32_t n = 1);
  /// ζ_n^a for any integer a.
  static CycSum root(std::uint32_t n, std::int64_t a);

  std::uint32_t order() const { return n_; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  /// The same value written at order m (a multiple of order()).
  CycSum lifted(std::uint32_t m) const;
  /// Complex conjugate: ζ^a ↦ ζ^{-a}.
  CycSum conj() const;

  std::complex<double> evaluate() const;

  CycSum& operator+=(const CycSum& o);
  CycSum& operator-=(const CycSum& o);
  CycSum& operator*=(std::int64_t k);
  friend CycSum operator+(CycSum a, const CycSum& b) { return a += b; }
  friend CycSum operator-(CycSum a, const CycSum& b) { return a -= b; }
  friend CycSum operator*(CycSum a, std::int64_t k) { return a *= k; }
  friend CycSum operator*(std::int64_t k, CycSum a) { return a *= k; }
  friend CycSum operator*(const CycSum& a, const CycSum& b);
  CycSum operator-() const { return CycSum(*this) *= -1; }

  /// Exact equality of values (not of representations).
  friend bool operator==(const CycSum& a, const CycSum& b);

 private:
  std::uint32_t n_;
  std::vector<std::int64_t> c_;
};

/// Φ_n, coefficients from x^0 upward. Cached; safe to call concurrently.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

/// Remainder of the coefficient polynomial modulo Φ_n (degree < φ(n)).
std::vector<std::int64_t> reduce_cyclotomic(const CycSum& v);

/// The integer c when v = c exactly and the complex image agrees within
/// 1e-6; throws NonIntegralValue otherwise.
std::int64_t integer_part(const CycSum& v);
bool is_integral(const CycSum& v);

/// The character g^a ↦ ζ_n^{j a} of a cyclic group of order n with fixed
/// generator g.
struct MultChar {
  std::uint32_t n = 1;
  std::int64_t j = 0;

  /// Value at the element with discrete log a.
  CycSum operator()(std::int64_t a) const { return CycSum::root(n, j * (a % static_cast<std::int64_t>(n))); }
  bool is_trivial() const { return j % static_cast<std::int64_t>(n) == 0; }
  /// Order of the character as an element of the dual group.
  std::uint32_t order() const;
};

/// Σ_{a ∈ logs} χ(g^a). Every log must lie in [0, n).
CycSum char_sum(const MultChar& chi, const std::vector<std::int64_t>& logs);

}  // namespace pstlie
