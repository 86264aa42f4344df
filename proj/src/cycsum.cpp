#include "pstlie/cycsum.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pstlie/errors.hpp"

namespace pstlie {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("CycSum: coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("CycSum: coefficient overflow");
  return r;
}

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) { return static_cast<std::uint32_t>(std::lcm(a, b)); }

}  // namespace

CycSum::CycSum(std::uint32_t n) : n_(n), c_(n, 0) {
  if (n == 0) throw std::invalid_argument("CycSum: order must be positive");
}

CycSum CycSum::integer(std::int64_t v, std::uint32_t n) {
  CycSum s(n);
  s.c_[0] = v;
  return s;
}

CycSum CycSum::root(std::uint32_t n, std::int64_t a) {
  CycSum s(n);
  s.c_[static_cast<std::size_t>(mod_floor(a, n))] = 1;
  return s;
}

CycSum CycSum::lifted(std::uint32_t m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("CycSum::lifted: target order is not a multiple");
  CycSum s(m);
  const std::uint32_t f = m / n_;
  for (std::uint32_t a = 0; a < n_; ++a) s.c_[a * f] = c_[a];
  return s;
}

CycSum CycSum::conj() const {
  CycSum s(n_);
  for (std::uint32_t a = 0; a < n_; ++a) s.c_[(n_ - a) % n_] = c_[a];
  return s;
}

std::complex<double> CycSum::evaluate() const {
  std::complex<double> z = 0;
  for (std::uint32_t a = 0; a < n_; ++a) {
    if (c_[a] == 0) continue;
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(n_);
    z += static_cast<double>(c_[a]) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

CycSum& CycSum::operator+=(const CycSum& o) {
  const std::uint32_t m = lcm32(n_, o.n_);
  if (m != n_) *this = lifted(m);
  const CycSum b = o.lifted(m);
  for (std::uint32_t a = 0; a < m; ++a) c_[a] = checked_add(c_[a], b.c_[a]);
  return *this;
}

CycSum& CycSum::operator-=(const CycSum& o) { return *this += -o; }

CycSum& CycSum::operator*=(std::int64_t k) {
  for (auto& x : c_) x = checked_mul(x, k);
  return *this;
}

CycSum operator*(const CycSum& a, const CycSum& b) {
  const std::uint32_t m = lcm32(a.n_, b.n_);
  const CycSum x = a.lifted(m);
  const CycSum y = b.lifted(m);
  std::vector<std::uint32_t> ny;
  for (std::uint32_t j = 0; j < m; ++j)
    if (y.c_[j] != 0) ny.push_back(j);
  CycSum r(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (x.c_[i] == 0) continue;
    for (std::uint32_t j : ny) {
      std::uint32_t k = i + j;
      if (k >= m) k -= m;
      r.c_[k] = checked_add(r.c_[k], checked_mul(x.c_[i], y.c_[j]));
    }
  }
  return r;
}

bool operator==(const CycSum& a, const CycSum& b) {
  for (std::int64_t c : reduce_cyclotomic(a - b))
    if (c != 0) return false;
  return true;
}

std::uint32_t MultChar::order() const {
  const std::int64_t jj = mod_floor(j, n);
  return static_cast<std::uint32_t>(n / std::gcd(static_cast<std::int64_t>(n), jj));
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // x^n - 1 divided by Φ_d for every proper divisor d.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quo(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t c = num[i];  // den is monic
      quo[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t t = 0; t <= dd; ++t) num[i - dd + t] = checked_add(num[i - dd + t], -checked_mul(c, den[t]));
    }
    for (std::size_t i = 0; i < dd; ++i)
      if (num[i] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
    num = std::move(quo);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(num)).first->second;
}

std::vector<std::int64_t> reduce_cyclotomic(const CycSum& v) {
  const auto& phi = cyclotomic_polynomial(v.order());
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> r = v.coefficients();
  for (std::size_t i = r.size(); i-- > deg;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t t = 0; t <= deg; ++t) r[i - deg + t] = checked_add(r[i - deg + t], -checked_mul(c, phi[t]));
  }
  r.resize(deg);
  return r;
}

bool is_integral(const CycSum& v) {
  const auto r = reduce_cyclotomic(v);
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

std::int64_t integer_part(const CycSum& v) {
  const auto r = reduce_cyclotomic(v);
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) throw NonIntegralValue("value is not a rational integer (order " + std::to_string(v.order()) + ")");
  const std::int64_t c = r.empty() ? 0 : r[0];
  const auto z = v.evaluate();
  if (std::abs(z - std::complex<double>(static_cast<double>(c), 0.0)) > 1e-6)
    throw NonIntegralValue("exact and floating images disagree for integer " + std::to_string(c));
  return c;
}

CycSum char_sum(const MultChar& chi, const std::vector<std::int64_t>& logs) {
  CycSum s(chi.n);
  for (std::int64_t a : logs) {
    if (a < 0 || a >= static_cast<std::int64_t>(chi.n)) throw std::out_of_range("char_sum: element outside the group");
    s += chi(a);
  }
  return s;
}

}  // namespace pstlie
