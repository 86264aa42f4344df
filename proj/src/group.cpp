#include "pstlie/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "pstlie/errors.hpp"

namespace pstlie {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::GL: return "gl";
    case Family::GU: return "gu";
    case Family::SL: return "sl";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "gl" || s == "GL") return Family::GL;
  if (s == "gu" || s == "GU") return Family::GU;
  if (s == "sl" || s == "SL") return Family::SL;
  throw std::invalid_argument("unknown family: " + s);
}

// ---------------------------------------------------------------------------
// 2x2 matrices

Mat2 mat_identity(const FiniteField& F) { return {F.one(), F.zero(), F.zero(), F.one()}; }

Mat2 mat_scalar(FieldElement x) { return {x, FieldElement{0}, FieldElement{0}, x}; }

Mat2 mat_mul(const FiniteField& F, const Mat2& x, const Mat2& y) {
  return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
          F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

FieldElement mat_det(const FiniteField& F, const Mat2& m) { return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c)); }

FieldElement mat_trace(const FiniteField& F, const Mat2& m) { return F.add(m.a, m.d); }

Mat2 mat_inv(const FiniteField& F, const Mat2& m) {
  const FieldElement det = mat_det(F, m);
  if (det.is_zero()) throw std::invalid_argument("mat_inv: singular matrix");
  const FieldElement r = F.inv(det);
  return {F.mul(m.d, r), F.neg(F.mul(m.b, r)), F.neg(F.mul(m.c, r)), F.mul(m.a, r)};
}

Mat2 mat_entry_pow(const FiniteField& F, const Mat2& m, std::int64_t e) {
  return {F.pow(m.a, e), F.pow(m.b, e), F.pow(m.c, e), F.pow(m.d, e)};
}

Mat2 mat_conj_transpose(const FiniteField& F, const Mat2& m, std::int64_t e) {
  return {F.pow(m.a, e), F.pow(m.c, e), F.pow(m.b, e), F.pow(m.d, e)};
}

std::string mat_to_string(const FiniteField& F, const Mat2& m) {
  return "[[" + F.to_string(m.a) + "," + F.to_string(m.b) + "],[" + F.to_string(m.c) + "," + F.to_string(m.d) + "]]";
}

// ---------------------------------------------------------------------------
// Sizes

std::uint64_t group_order(Family f, std::uint32_t q) {
  const std::uint64_t Q = q;
  switch (f) {
    case Family::GL: return (Q * Q - 1) * (Q * Q - Q);
    case Family::GU: return Q * (Q - 1) * (Q + 1) * (Q + 1);
    case Family::SL: return Q * (Q * Q - 1);
  }
  return 0;
}

std::uint64_t class_size(const ClassLabel& c, std::uint32_t q) {
  const std::uint64_t Q = q;
  switch (c.kind) {
    case ClassKind::Central: return 1;
    case ClassKind::Unipotent: return c.family == Family::SL ? (Q * Q - 1) / 2 : Q * Q - 1;
    case ClassKind::Split: return c.family == Family::GU ? Q * (Q - 1) : Q * (Q + 1);
    case ClassKind::Nonsplit: return c.family == Family::GU ? Q * (Q + 1) : Q * (Q - 1);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct LieGroup::RepCache {
  std::mutex mu;
  bool built = false;
  std::map<ClassLabel, Mat2> reps;
};

LieGroup::LieGroup(Family family, FieldTower tower)
    : family_(family), tower_(std::move(tower)), rep_cache_(std::make_shared<RepCache>()) {
  build_classes();
  build_characters();
}

LieGroup LieGroup::make(Family family, std::uint32_t q) { return LieGroup(family, make_tower_for_order(q)); }

const FiniteField& LieGroup::matrix_field() const {
  return family_ == Family::GU ? tower_.ext() : tower_.base();
}

void LieGroup::build_classes() {
  const std::int64_t q = this->q();
  const std::int64_t Q = q - 1;
  const std::int64_t N = q * q - 1;
  classes_.clear();
  auto add = [&](ClassKind k, std::int64_t p1, std::int64_t p2 = 0) { classes_.push_back({family_, k, p1, p2}); };
  switch (family_) {
    case Family::GL:
      for (std::int64_t a = 0; a < Q; ++a) add(ClassKind::Central, a);
      for (std::int64_t a = 0; a < Q; ++a) add(ClassKind::Unipotent, a);
      for (std::int64_t a = 0; a < Q; ++a)
        for (std::int64_t b = a + 1; b < Q; ++b) add(ClassKind::Split, a, b);
      for (std::int64_t b = 0; b < N; ++b)
        if (b % (q + 1) != 0 && b <= mod_floor(q * b, N)) add(ClassKind::Nonsplit, b);
      break;
    case Family::GU:
      for (std::int64_t t = 0; t <= q; ++t) add(ClassKind::Central, t * Q);
      for (std::int64_t t = 0; t <= q; ++t) add(ClassKind::Unipotent, t * Q);
      for (std::int64_t s = 0; s <= q; ++s)
        for (std::int64_t t = s + 1; t <= q; ++t) add(ClassKind::Split, s * Q, t * Q);
      for (std::int64_t b = 0; b < N; ++b)
        if (b % Q != 0 && b <= mod_floor(-q * b, N)) add(ClassKind::Nonsplit, b);
      break;
    case Family::SL: {
      const std::int64_t h = Q / 2;
      add(ClassKind::Central, 0);
      add(ClassKind::Central, h);
      for (std::int64_t e : {std::int64_t{0}, h})
        for (std::int64_t k : {0, 1}) add(ClassKind::Unipotent, e, k);
      for (std::int64_t a = 1; a < h; ++a) add(ClassKind::Split, a);
      for (std::int64_t t = 1; 2 * t < q + 1; ++t) add(ClassKind::Nonsplit, t * Q);
      break;
    }
  }
}

bool LieGroup::contains(const Mat2& g) const {
  const FiniteField& F = matrix_field();
  const FieldElement det = mat_det(F, g);
  switch (family_) {
    case Family::GL: return !det.is_zero();
    case Family::SL: return det == F.one();
    case Family::GU: return mat_mul(F, mat_conj_transpose(F, g, q()), g) == mat_identity(F);
  }
  return false;
}

ClassLabel LieGroup::classify(const Mat2& g) const {
  if (!contains(g)) throw std::invalid_argument("classify: matrix is not in the group");
  const FiniteField& F = matrix_field();
  const FiniteField& E = tower_.ext();
  const std::int64_t q = this->q();
  const std::int64_t Q = q - 1;
  const std::int64_t N = q * q - 1;
  const FieldElement tr = mat_trace(F, g);
  const FieldElement det = mat_det(F, g);
  const FieldElement disc = F.sub(F.mul(tr, tr), F.mul(F.from_int(4), det));
  const FieldElement half = F.inv(F.from_int(2));
  const bool scalar = g.b.is_zero() && g.c.is_zero() && g.a == g.d;

  if (disc.is_zero()) {
    const FieldElement x = F.mul(tr, half);
    const std::int64_t lx = F.log(x);
    if (scalar) return {family_, ClassKind::Central, lx, 0};
    if (family_ != Family::SL) return {family_, ClassKind::Unipotent, lx, 0};
    const Mat2 m{F.sub(g.a, x), g.b, g.c, F.sub(g.d, x)};
    const FieldElement s = m.c.is_zero() ? F.neg(m.b) : m.c;
    return {family_, ClassKind::Unipotent, lx, F.is_square(F.neg(s)) ? 0 : 1};
  }

  if (family_ == Family::GU) {
    const auto s = F.sqrt(disc);
    if (!s) throw std::logic_error("classify: unitary matrix with eigenvalues outside F_{q^2}");
    const FieldElement e1 = F.mul(F.add(tr, *s), half);
    const FieldElement e2 = F.mul(F.sub(tr, *s), half);
    const std::int64_t b1 = F.log(e1), b2 = F.log(e2);
    if (b1 % Q == 0 && b2 % Q == 0) return {family_, ClassKind::Split, std::min(b1, b2), std::max(b1, b2)};
    return {family_, ClassKind::Nonsplit, std::min(b1, mod_floor(-q * b1, N)), 0};
  }

  if (F.is_square(disc)) {
    const FieldElement s = *F.sqrt(disc);
    const std::int64_t a1 = F.log(F.mul(F.add(tr, s), half));
    const std::int64_t a2 = F.log(F.mul(F.sub(tr, s), half));
    if (family_ == Family::GL) return {family_, ClassKind::Split, std::min(a1, a2), std::max(a1, a2)};
    return {family_, ClassKind::Split, std::min(a1, mod_floor(-a1, Q)), 0};
  }

  const FieldElement root = *E.sqrt(tower_.embed(disc));
  const FieldElement z = E.mul(E.add(tower_.embed(tr), root), tower_.embed(half));
  const std::int64_t b = E.log(z);
  if (family_ == Family::GL) return {family_, ClassKind::Nonsplit, std::min(b, mod_floor(q * b, N)), 0};
  return {family_, ClassKind::Nonsplit, std::min(b, mod_floor(-b, N)), 0};
}

ClassLabel LieGroup::identity_class() const { return {family_, ClassKind::Central, 0, 0}; }

ClassLabel LieGroup::central_involution_class() const {
  const std::int64_t q = this->q();
  const std::int64_t a = family_ == Family::GU ? (q * q - 1) / 2 : (q - 1) / 2;
  return {family_, ClassKind::Central, a, 0};
}

Mat2 LieGroup::central_involution() const { return mat_scalar(matrix_field().minus_one()); }

ClassLabel LieGroup::inverse_class(const ClassLabel& c) const {
  const std::int64_t q = this->q();
  const std::int64_t Q = q - 1;
  const std::int64_t N = q * q - 1;
  const std::int64_t M = family_ == Family::GU ? N : Q;  // modulus for eigenvalue logs
  ClassLabel r = c;
  switch (c.kind) {
    case ClassKind::Central: r.p1 = mod_floor(-c.p1, M); break;
    case ClassKind::Unipotent:
      r.p1 = mod_floor(-c.p1, M);
      if (family_ == Family::SL && q % 4 == 3) r.p2 = 1 - c.p2;
      break;
    case ClassKind::Split:
      if (family_ == Family::SL) break;  // {x, 1/x} is inverse-closed
      r.p1 = mod_floor(-c.p1, M);
      r.p2 = mod_floor(-c.p2, M);
      if (r.p1 > r.p2) std::swap(r.p1, r.p2);
      break;
    case ClassKind::Nonsplit: {
      const std::int64_t b = mod_floor(-c.p1, N);
      if (family_ == Family::GL) r.p1 = std::min(b, mod_floor(q * b, N));
      if (family_ == Family::GU) r.p1 = std::min(b, mod_floor(-q * b, N));
      break;
    }
  }
  return r;
}

std::vector<Mat2> LieGroup::enumerate(std::uint64_t bound) const {
  if (order() > bound)
    throw BoundExceeded("enumerate: group of order " + std::to_string(order()) + " exceeds bound " +
                        std::to_string(bound));
  const FiniteField& F = matrix_field();
  const std::uint32_t n = F.order();
  std::vector<Mat2> out;
  out.reserve(order());
  if (family_ != Family::GU) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          for (std::uint32_t d = 0; d < n; ++d) {
            const Mat2 m{{a}, {b}, {c}, {d}};
            if (contains(m)) out.push_back(m);
          }
    return out;
  }
  // Unitary: unit first column (a, c), second column u·(-c^q, a^q) with u ∈ E.
  const std::int64_t q = this->q();
  std::vector<FieldElement> E;
  for (std::int64_t t = 0; t <= q; ++t) E.push_back(F.exp(t * (q - 1)));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t c = 0; c < n; ++c) {
      const FieldElement fa{a}, fc{c};
      const FieldElement nrm = F.add(F.pow(fa, q + 1), F.pow(fc, q + 1));
      if (nrm != F.one()) continue;
      for (const FieldElement u : E)
        out.push_back({fa, F.neg(F.mul(u, F.pow(fc, q))), fc, F.mul(u, F.pow(fa, q))});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t LieGroup::element_order(const Mat2& g) const {
  const FiniteField& F = matrix_field();
  const Mat2 id = mat_identity(F);
  Mat2 x = g;
  std::uint64_t k = 1;
  while (x != id) {
    x = mat_mul(F, x, g);
    ++k;
  }
  return k;
}

Mat2 LieGroup::representative(const ClassLabel& c) const {
  const FiniteField& F = matrix_field();
  if (family_ == Family::GU && (c.kind == ClassKind::Unipotent || c.kind == ClassKind::Nonsplit)) {
    std::lock_guard<std::mutex> lock(rep_cache_->mu);
    if (!rep_cache_->built) {
      for (const Mat2& g : enumerate(order())) rep_cache_->reps.emplace(classify(g), g);
      rep_cache_->built = true;
    }
    auto it = rep_cache_->reps.find(c);
    if (it == rep_cache_->reps.end()) throw std::invalid_argument("representative: unknown class");
    return it->second;
  }
  switch (c.kind) {
    case ClassKind::Central: return mat_scalar(F.exp(c.p1));
    case ClassKind::Unipotent: {
      const FieldElement x = F.exp(c.p1);
      if (family_ == Family::SL) return {x, c.p2 == 0 ? F.one() : tower_.delta(), F.zero(), x};
      return {x, F.one(), F.zero(), x};
    }
    case ClassKind::Split:
      if (family_ == Family::SL) return {F.exp(c.p1), F.zero(), F.zero(), F.exp(-c.p1)};
      return {F.exp(c.p1), F.zero(), F.zero(), F.exp(c.p2)};
    case ClassKind::Nonsplit: {
      const auto [x, y] = tower_.coordinates(tower_.ext().exp(c.p1));
      return {x, F.mul(tower_.delta(), y), y, x};
    }
  }
  throw std::logic_error("representative: bad class kind");
}

std::string LieGroup::class_name(const ClassLabel& c) const {
  const FiniteField& F = matrix_field();
  const FiniteField& E = tower_.ext();
  std::ostringstream os;
  if (family_ == Family::SL) {
    const std::string sign = c.p1 == 0 ? "1" : "-1";
    switch (c.kind) {
      case ClassKind::Central: return c.p1 == 0 ? "I" : "-I";
      case ClassKind::Unipotent: return "d2(" + sign + "," + (c.p2 == 0 ? "1" : "Δ") + ")";
      case ClassKind::Split: return "d3(" + F.to_string(F.exp(c.p1)) + ")";
      case ClassKind::Nonsplit: {
        const auto [x, y] = tower_.coordinates(E.exp(c.p1));
        return "d4(" + F.to_string(x) + "," + F.to_string(y) + ")";
      }
    }
  }
  const std::string pre = family_ == Family::GL ? "c" : "C";
  switch (c.kind) {
    case ClassKind::Central: os << pre << "1(" << F.to_string(F.exp(c.p1)) << ")"; break;
    case ClassKind::Unipotent: os << pre << "2(" << F.to_string(F.exp(c.p1)) << ")"; break;
    case ClassKind::Split:
      os << pre << "3(" << F.to_string(F.exp(c.p1)) << "," << F.to_string(F.exp(c.p2)) << ")";
      break;
    case ClassKind::Nonsplit: os << pre << "4(" << E.to_string(E.exp(c.p1)) << ")"; break;
  }
  return os.str();
}

}  // namespace pstlie
