#include "pstlie/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pstlie {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low to high, mod p

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = [&] {
    // m is monic in every caller, but keep the general case cheap to read.
    for (std::uint32_t x = 1; x < p; ++x)
      if ((static_cast<std::uint64_t>(x) * m.back()) % p == 1) return x;
    throw std::logic_error("poly_mod: non-invertible leading coefficient");
  }();
  while (a.size() > dm) {
    const std::uint64_t c = (static_cast<std::uint64_t>(a.back()) * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::uint64_t sub = (c * m[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool divides(const Poly& d, const Poly& f, std::uint32_t p) {
  return poly_mod(f, d, p).empty();
}

// Monic polynomial of degree `deg` whose low coefficients encode `e` in base p.
Poly monic_from_index(std::uint64_t e, std::uint32_t deg, std::uint32_t p) {
  Poly f(deg + 1, 0);
  for (std::uint32_t i = 0; i < deg; ++i) {
    f[i] = static_cast<std::uint32_t>(e % p);
    e /= p;
  }
  f[deg] = 1;
  return f;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t e = 0; e < count; ++e) {
      if (divides(monic_from_index(e, d, p), f, p)) return false;
    }
  }
  return true;
}

Poly lowest_irreducible(std::uint32_t p, std::uint32_t k) {
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t e = 0; e < count; ++e) {
    Poly f = monic_from_index(e, k, p);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic must be prime");
  if (k == 0) throw std::invalid_argument("FiniteField: degree must be at least 1");
  q_ = static_cast<std::uint32_t>(ipow(p, k));
  modulus_ = lowest_irreducible(p, k);
  build_tables(std::nullopt);
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k, FieldElement generator) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic must be prime");
  if (k == 0) throw std::invalid_argument("FiniteField: degree must be at least 1");
  q_ = static_cast<std::uint32_t>(ipow(p, k));
  modulus_ = lowest_irreducible(p, k);
  build_tables(generator);
}

std::vector<std::uint32_t> FiniteField::digits(std::uint32_t code) const {
  std::vector<std::uint32_t> d(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = code % p_;
    code /= p_;
  }
  return d;
}

std::uint32_t FiniteField::encode(const std::vector<std::uint32_t>& d) const {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p_ + d[i];
  return code;
}

std::uint32_t FiniteField::poly_mul_code(std::uint32_t a, std::uint32_t b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  Poly prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
  Poly r = poly_mod(prod, modulus_, p_);
  r.resize(k_, 0);
  return encode(r);
}

void FiniteField::build_tables(std::optional<FieldElement> forced_generator) {
  const std::uint32_t n = q_ - 1;
  auto order_of = [&](std::uint32_t code) {
    std::uint32_t x = code;
    for (std::uint32_t e = 1; e <= n; ++e) {
      if (x == 1) return e;
      x = poly_mul_code(x, code);
    }
    return n + 1;  // unreachable for nonzero elements
  };
  if (forced_generator) {
    if (forced_generator->code == 0 || forced_generator->code >= q_ || order_of(forced_generator->code) != n)
      throw std::invalid_argument("FiniteField: requested generator is not primitive");
    generator_ = *forced_generator;
  } else {
    std::uint32_t c = 1;
    while (order_of(c) != n) ++c;
    generator_ = {c};
  }
  exp_.assign(n, 0);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t e = 0; e < n; ++e) {
    exp_[e] = x;
    log_[x] = e;
    x = poly_mul_code(x, generator_.code);
  }
}

FieldElement FiniteField::from_int(std::int64_t v) const {
  return {static_cast<std::uint32_t>(mod_floor(v, p_))};
}

FieldElement FiniteField::element(std::uint32_t code) const {
  if (code >= q_) throw std::out_of_range("FiniteField::element: code out of range");
  return {code};
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  if (k_ == 1) return {(a.code + b.code) % p_};
  std::uint32_t r = 0, place = 1, x = a.code, y = b.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return {r};
}

FieldElement FiniteField::neg(FieldElement a) const {
  if (k_ == 1) return {(p_ - a.code) % p_};
  std::uint32_t r = 0, place = 1, x = a.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return {r};
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  std::uint32_t e = log_[a.code] + log_[b.code];
  if (e >= q_ - 1) e -= q_ - 1;
  return {exp_[e]};
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("FiniteField::inv: zero has no inverse");
  const std::uint32_t l = log_[a.code];
  return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FieldElement FiniteField::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement FiniteField::pow(FieldElement a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e > 0) return zero();
    if (e == 0) return one();
    throw std::domain_error("FiniteField::pow: negative power of zero");
  }
  const std::int64_t n = q_ - 1;
  const std::int64_t l = log_[a.code];
  return {exp_[static_cast<std::size_t>(mod_floor(l * mod_floor(e, n), n))]};
}

std::uint32_t FiniteField::log(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("FiniteField::log: zero has no discrete log");
  if (a.code >= q_) throw std::out_of_range("FiniteField::log: code out of range");
  return log_[a.code];
}

FieldElement FiniteField::exp(std::int64_t e) const {
  return {exp_[static_cast<std::size_t>(mod_floor(e, q_ - 1))]};
}

bool FiniteField::is_square(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("is_square: zero input");
  return log(a) % 2 == 0;
}

std::optional<FieldElement> FiniteField::sqrt(FieldElement a) const {
  if (a.is_zero()) return zero();
  const std::uint32_t l = log(a);
  if (l % 2 != 0) return std::nullopt;
  // Roots have logs l/2 and l/2 + (q-1)/2; the first is the smaller one.
  return exp(l / 2);
}

std::uint32_t FiniteField::multiplicative_order(FieldElement a) const {
  const std::uint32_t n = q_ - 1;
  const std::uint32_t l = log(a);
  std::uint32_t g = n, b = l;
  while (b != 0) {
    const std::uint32_t t = g % b;
    g = b;
    b = t;
  }
  return n / g;
}

std::uint32_t FiniteField::absolute_trace(FieldElement a) const {
  FieldElement t = zero();
  FieldElement x = a;
  for (std::uint32_t i = 0; i < k_; ++i) {
    t = add(t, x);
    x = frobenius(x);
  }
  if (t.code >= p_) throw std::logic_error("absolute_trace: result outside prime field");
  return t.code;
}

std::string FiniteField::to_string(FieldElement a) const {
  if (k_ == 1) return std::to_string(a.code);
  const auto d = digits(a.code);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (d[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << d[i];
    } else {
      if (d[i] != 1) os << d[i] << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

std::string FiniteField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << modulus_[i];
    } else {
      if (modulus_[i] != 1) os << modulus_[i] << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

FieldTower::FieldTower(std::shared_ptr<const FiniteField> base, std::shared_ptr<const FiniteField> ext,
                       std::vector<FieldElement> embedding)
    : base_(std::move(base)), ext_(std::move(ext)), embedding_(std::move(embedding)) {
  restriction_.assign(ext_->order(), -1);
  for (std::uint32_t c = 0; c < base_->order(); ++c) restriction_[embedding_[c].code] = c;
  delta_ = base_->exp(1);
  sqrt_delta_ = *ext_->sqrt(embed(delta_));
}

std::optional<FieldElement> FieldTower::restrict(FieldElement z) const {
  const std::int64_t r = restriction_.at(z.code);
  if (r < 0) return std::nullopt;
  return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement FieldTower::norm(FieldElement z) const {
  return *restrict(ext_->pow(z, static_cast<std::int64_t>(q()) + 1));
}

bool FieldTower::in_norm_one(FieldElement z) const {
  if (z.is_zero()) return false;
  return ext_->log(z) % (q() - 1) == 0;
}

std::vector<FieldElement> FieldTower::norm_fiber(FieldElement x) const {
  if (x.is_zero()) throw std::domain_error("norm_fiber: zero input");
  const std::int64_t n = q() - 1;
  const std::int64_t a = base_->log(x);
  std::vector<FieldElement> out;
  for (std::int64_t t = 0; t <= static_cast<std::int64_t>(q()); ++t) out.push_back(ext_->exp(a + n * t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElement> FieldTower::twist_fiber(FieldElement x) const {
  if (!in_norm_one(x)) throw std::domain_error("twist_fiber: input not in the norm-one subgroup");
  const std::int64_t qq = q();
  const std::int64_t l = ext_->log(x) / (qq - 1);
  std::vector<FieldElement> out;
  for (std::int64_t t = 0; t < qq - 1; ++t) out.push_back(ext_->exp(-l + (qq + 1) * t));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<FieldElement, FieldElement> FieldTower::coordinates(FieldElement z) const {
  const FiniteField& F = *ext_;
  const FieldElement zq = conj(z);
  const FieldElement two_inv = F.inv(F.from_int(2));
  const FieldElement x = F.mul(F.add(z, zq), two_inv);
  const FieldElement y = F.div(F.mul(F.sub(z, zq), two_inv), sqrt_delta_);
  return {*restrict(x), *restrict(y)};
}

FieldTower make_tower(std::uint32_t p, std::uint32_t k) {
  if (p == 2) throw std::invalid_argument("make_tower: characteristic 2 is not supported (q must be odd)");
  if (!is_prime(p)) throw std::invalid_argument("make_tower: p must be prime");
  if (k == 0) throw std::invalid_argument("make_tower: degree must be at least 1");

  auto ext = std::make_shared<const FiniteField>(p, 2 * k);
  const FiniteField provisional(p, k);
  const auto& m = provisional.modulus();

  // Smallest root of the base modulus inside the extension.
  FieldElement root{};
  bool found = false;
  for (std::uint32_t c = 0; c < ext->order() && !found; ++c) {
    FieldElement acc = ext->zero();
    for (std::size_t i = m.size(); i-- > 0;) acc = ext->add(ext->mul(acc, {c}), ext->from_int(m[i]));
    if (acc.is_zero()) {
      root = {c};
      found = true;
    }
  }
  if (!found) throw std::logic_error("make_tower: base modulus has no root in the extension");

  const std::uint32_t q = provisional.order();
  std::vector<FieldElement> embedding(q);
  for (std::uint32_t c = 0; c < q; ++c) {
    FieldElement acc = ext->zero();
    FieldElement power = ext->one();
    std::uint32_t code = c;
    for (std::uint32_t i = 0; i < k; ++i) {
      acc = ext->add(acc, ext->mul(ext->from_int(code % p), power));
      power = ext->mul(power, root);
      code /= p;
    }
    embedding[c] = acc;
  }

  const FieldElement target = ext->exp(static_cast<std::int64_t>(q) + 1);
  const auto it = std::find(embedding.begin(), embedding.end(), target);
  if (it == embedding.end()) throw std::logic_error("make_tower: norm of generator not in base image");
  const FieldElement base_gen{static_cast<std::uint32_t>(it - embedding.begin())};
  auto base = std::make_shared<const FiniteField>(p, k, base_gen);
  return FieldTower(std::move(base), std::move(ext), std::move(embedding));
}

FieldTower make_tower_for_order(std::uint32_t q) {
  if (q < 3) throw std::invalid_argument("make_tower_for_order: q must be an odd prime power >= 3");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw std::invalid_argument("make_tower_for_order: q is not a prime power");
  return make_tower(p, k);
}

}  // namespace pstlie
