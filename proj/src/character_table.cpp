#include <stdexcept>

#include "pstlie/errors.hpp"
#include "pstlie/group.hpp"

namespace pstlie {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

CycSum zero() { return CycSum::integer(0); }

std::uint32_t u32(std::int64_t v) { return static_cast<std::uint32_t>(v); }

}  // namespace

void LieGroup::build_characters() {
  const std::int64_t q = this->q();
  const std::int64_t Q = q - 1;
  const std::int64_t N = q * q - 1;
  characters_.clear();
  auto add = [&](IrrKind k, std::int64_t p1 = 0, std::int64_t p2 = 0) { characters_.push_back({family_, k, p1, p2}); };
  switch (family_) {
    case Family::GL:
      for (std::int64_t j = 0; j < Q; ++j) add(IrrKind::Linear, j);
      for (std::int64_t j = 0; j < Q; ++j) add(IrrKind::Steinberg, j);
      for (std::int64_t i = 0; i < Q; ++i)
        for (std::int64_t j = i + 1; j < Q; ++j) add(IrrKind::Principal, i, j);
      for (std::int64_t m = 0; m < N; ++m)
        if (m % (q + 1) != 0 && m <= mod_floor(q * m, N)) add(IrrKind::Cuspidal, m);
      break;
    case Family::GU:
      for (std::int64_t j = 0; j <= q; ++j) add(IrrKind::Linear, j);
      for (std::int64_t j = 0; j <= q; ++j) add(IrrKind::Steinberg, j);
      for (std::int64_t i = 0; i <= q; ++i)
        for (std::int64_t j = i + 1; j <= q; ++j) add(IrrKind::Principal, i, j);
      for (std::int64_t m = 0; m < N; ++m)
        if (m % Q != 0 && m <= mod_floor(-q * m, N)) add(IrrKind::Cuspidal, m);
      break;
    case Family::SL:
      add(IrrKind::Linear, 0);
      add(IrrKind::Steinberg, 0);
      for (std::int64_t j = 1; 2 * j < Q; ++j) add(IrrKind::Principal, j);
      for (std::int64_t j = 1; 2 * j < q + 1; ++j) add(IrrKind::Cuspidal, j);
      add(IrrKind::HalfCuspidal, 1);
      add(IrrKind::HalfCuspidal, -1);
      add(IrrKind::HalfPrincipal, 1);
      add(IrrKind::HalfPrincipal, -1);
      break;
  }
}

std::uint64_t LieGroup::degree(const IrrLabel& chi) const {
  const std::uint64_t q = this->q();
  switch (chi.kind) {
    case IrrKind::Linear: return 1;
    case IrrKind::Steinberg: return q;
    case IrrKind::Cuspidal: return family_ == Family::GU ? q + 1 : q - 1;
    case IrrKind::Principal: return family_ == Family::GU ? q - 1 : q + 1;
    case IrrKind::HalfCuspidal: return (q - 1) / 2;
    case IrrKind::HalfPrincipal: return (q + 1) / 2;
  }
  return 0;
}

CycSum LieGroup::char_value(const IrrLabel& chi, const ClassLabel& c) const {
  if (chi.family != family_ || c.family != family_) throw std::invalid_argument("char_value: family mismatch");
  switch (family_) {
    case Family::GL: return value_gl(chi, c);
    case Family::GU: return value_gu(chi, c);
    case Family::SL: return value_sl(chi, c, false);
  }
  throw std::logic_error("char_value: bad family");
}

CycSum LieGroup::full_char_value(const IrrLabel& chi, const ClassLabel& c) const {
  if (family_ == Family::SL) return value_sl(chi, c, true);
  return char_value(chi, c);
}

int LieGroup::central_sign(const IrrLabel& chi) const {
  const std::int64_t v = integer_part(char_value(chi, central_involution_class()));
  const std::int64_t d = static_cast<std::int64_t>(degree(chi));
  if (v == d) return 1;
  if (v == -d) return -1;
  throw std::logic_error("central_sign: central value is not ±degree");
}

CycSum LieGroup::value_gl(const IrrLabel& chi, const ClassLabel& c) const {
  const std::int64_t q = this->q();
  const std::uint32_t Q = u32(q - 1);
  const std::uint32_t N = u32(q * q - 1);
  const std::int64_t j = chi.p1, j1 = chi.p1, j2 = chi.p2, m = chi.p1;
  switch (c.kind) {
    case ClassKind::Central:
    case ClassKind::Unipotent: {
      const std::int64_t a = c.p1;
      const bool central = c.kind == ClassKind::Central;
      switch (chi.kind) {
        case IrrKind::Linear: return CycSum::root(Q, 2 * j * a);
        case IrrKind::Steinberg: return central ? q * CycSum::root(Q, 2 * j * a) : zero();
        case IrrKind::Cuspidal: return (central ? q - 1 : -1) * CycSum::root(N, m * (q + 1) * a);
        case IrrKind::Principal: return (central ? q + 1 : 1) * CycSum::root(Q, (j1 + j2) * a);
        default: break;
      }
      break;
    }
    case ClassKind::Split: {
      const std::int64_t a1 = c.p1, a2 = c.p2;
      switch (chi.kind) {
        case IrrKind::Linear:
        case IrrKind::Steinberg: return CycSum::root(Q, j * (a1 + a2));
        case IrrKind::Cuspidal: return zero();
        case IrrKind::Principal: return CycSum::root(Q, j1 * a1 + j2 * a2) + CycSum::root(Q, j1 * a2 + j2 * a1);
        default: break;
      }
      break;
    }
    case ClassKind::Nonsplit: {
      const std::int64_t b = c.p1;
      switch (chi.kind) {
        case IrrKind::Linear: return CycSum::root(Q, j * b);
        case IrrKind::Steinberg: return -CycSum::root(Q, j * b);
        case IrrKind::Cuspidal: return -(CycSum::root(N, m * b) + CycSum::root(N, m * q % N * b));
        case IrrKind::Principal: return zero();
        default: break;
      }
      break;
    }
  }
  throw std::invalid_argument("char_value: label not valid for GL");
}

CycSum LieGroup::value_gu(const IrrLabel& chi, const ClassLabel& c) const {
  const std::int64_t q = this->q();
  const std::int64_t Nn = q * q - 1;
  const std::uint32_t N = u32(Nn);
  const std::int64_t j = chi.p1, j1 = chi.p1, j2 = chi.p2, m = chi.p1;
  switch (c.kind) {
    case ClassKind::Central:
    case ClassKind::Unipotent: {
      const std::int64_t b = c.p1;
      const bool central = c.kind == ClassKind::Central;
      switch (chi.kind) {
        case IrrKind::Linear: return CycSum::root(N, 2 * j * b);
        case IrrKind::Steinberg: return central ? q * CycSum::root(N, 2 * j * b) : zero();
        case IrrKind::Principal: return (central ? q - 1 : -1) * CycSum::root(N, (j1 + j2) * b);
        case IrrKind::Cuspidal: return (central ? q + 1 : 1) * CycSum::root(N, m * b);
        default: break;
      }
      break;
    }
    case ClassKind::Split: {
      const std::int64_t b1 = c.p1, b2 = c.p2;
      switch (chi.kind) {
        case IrrKind::Linear: return CycSum::root(N, j * (b1 + b2));
        case IrrKind::Steinberg: return -CycSum::root(N, j * (b1 + b2));
        case IrrKind::Principal: return -(CycSum::root(N, j1 * b1 + j2 * b2) + CycSum::root(N, j1 * b2 + j2 * b1));
        case IrrKind::Cuspidal: return zero();
        default: break;
      }
      break;
    }
    case ClassKind::Nonsplit: {
      const std::int64_t b = c.p1;
      switch (chi.kind) {
        case IrrKind::Linear:
        case IrrKind::Steinberg: return CycSum::root(N, mod_floor((1 - q) * b, Nn) * j);
        case IrrKind::Principal: return zero();
        case IrrKind::Cuspidal: return CycSum::root(N, m * b) + CycSum::root(N, mod_floor(-q * m, Nn) * b);
        default: break;
      }
      break;
    }
  }
  throw std::invalid_argument("char_value: label not valid for GU");
}

CycSum LieGroup::value_sl(const IrrLabel& chi, const ClassLabel& c, bool full) const {
  const std::int64_t q = this->q();
  const std::uint32_t Q = u32(q - 1);
  const std::uint32_t N = u32(q * q - 1);
  const std::int64_t j = chi.p1;
  switch (chi.kind) {
    case IrrKind::Linear: return CycSum::integer(1);
    case IrrKind::Steinberg:
      switch (c.kind) {
        case ClassKind::Central: return CycSum::integer(q);
        case ClassKind::Unipotent: return zero();
        case ClassKind::Split: return CycSum::integer(1);
        case ClassKind::Nonsplit: return CycSum::integer(-1);
      }
      break;
    case IrrKind::Principal:  // I[λ, 1] restricted
      switch (c.kind) {
        case ClassKind::Central: return (q + 1) * CycSum::root(Q, j * c.p1);
        case ClassKind::Unipotent: return CycSum::root(Q, j * c.p1);
        case ClassKind::Split: return CycSum::root(Q, j * c.p1) + CycSum::root(Q, -j * c.p1);
        case ClassKind::Nonsplit: return zero();
      }
      break;
    case IrrKind::Cuspidal:  // π[μ̃] restricted, μ a character of E
      switch (c.kind) {
        case ClassKind::Central: return (q - 1) * CycSum::root(N, j * (q + 1) * c.p1);
        case ClassKind::Unipotent: return -CycSum::root(N, j * (q + 1) * c.p1);
        case ClassKind::Split: return zero();
        case ClassKind::Nonsplit: return -(CycSum::root(N, j * c.p1) + CycSum::root(N, -j * c.p1));
      }
      break;
    case IrrKind::HalfCuspidal:
    case IrrKind::HalfPrincipal: return half_value(chi, c, full);
  }
  throw std::invalid_argument("char_value: label not valid for SL");
}

CycSum LieGroup::half_value(const IrrLabel& chi, const ClassLabel& c, bool full) const {
  const FiniteField& F = tower_.base();
  const std::int64_t q = this->q();
  const std::uint32_t N = u32(q * q - 1);
  const bool is_u = chi.kind == IrrKind::HalfCuspidal;
  const bool plus = chi.p1 > 0;
  const int zeta_m1 = ((q - 1) / 2) % 2 == 0 ? 1 : -1;  // ζ(-1)
  const int mus_m1 = ((q + 1) / 2) % 2 == 0 ? 1 : -1;   // μ_s(-1)
  const bool minus = c.p1 != 0;                         // element ±1 for central/unipotent classes

  switch (c.kind) {
    case ClassKind::Central:
      if (is_u) return CycSum::integer((q - 1) / 2 * (minus ? mus_m1 : 1));
      return CycSum::integer((q + 1) / 2 * (minus ? zeta_m1 : 1));
    case ClassKind::Unipotent: {
      // η over squares / non-squares of the additive character x ↦ ζ_p^{Tr x}.
      const std::uint32_t p = F.characteristic();
      CycSum eta_s(p), eta_n(p);
      for (std::uint32_t code = 1; code < F.order(); ++code) {
        const FieldElement x{code};
        const CycSum term = CycSum::root(p, F.absolute_trace(x));
        if (F.is_square(x))
          eta_s += term;
        else
          eta_n += term;
      }
      const CycSum& first = plus ? eta_s : eta_n;
      const CycSum& second = plus ? eta_n : eta_s;
      const CycSum cst = CycSum::integer((zeta_m1 + 1) / 2);
      const bool delta_class = c.p2 != 0;
      if (is_u) {
        if (!minus) return delta_class ? second : first;
        return cst + (delta_class ? first : second);
      }
      if (!minus) return CycSum::integer(1) + (delta_class ? second : first);
      return cst + (delta_class ? second : first);
    }
    case ClassKind::Split:
      if (!full) throw UntabulatedValue("half-degree character requested on a split semisimple class");
      return is_u ? zero() : CycSum::root(2, c.p1);
    case ClassKind::Nonsplit:
      if (!full) throw UntabulatedValue("half-degree character requested on a nonsplit semisimple class");
      return is_u ? -CycSum::root(N, (q + 1) / 2 * c.p1) : zero();
  }
  throw std::logic_error("half_value: bad class kind");
}

std::string LieGroup::kind_name(const IrrLabel& chi) {
  switch (chi.kind) {
    case IrrKind::Linear: return chi.family == Family::SL ? "Trivial" : "Linear";
    case IrrKind::Steinberg: return "Steinberg";
    case IrrKind::Cuspidal: return "Cuspidal";
    case IrrKind::Principal: return "Principal";
    case IrrKind::HalfCuspidal: return chi.p1 > 0 ? "U+" : "U-";
    case IrrKind::HalfPrincipal: return chi.p1 > 0 ? "Z+" : "Z-";
  }
  return "?";
}

std::string LieGroup::params_string(const IrrLabel& chi) {
  switch (chi.kind) {
    case IrrKind::Linear:
    case IrrKind::Steinberg: return "j=" + std::to_string(chi.p1);
    case IrrKind::Cuspidal: return (chi.family == Family::SL ? "j=" : "m=") + std::to_string(chi.p1);
    case IrrKind::Principal:
      if (chi.family == Family::SL) return "j=" + std::to_string(chi.p1);
      return "j1=" + std::to_string(chi.p1) + ";j2=" + std::to_string(chi.p2);
    case IrrKind::HalfCuspidal:
    case IrrKind::HalfPrincipal: return "";
  }
  return "";
}

std::string LieGroup::char_name(const IrrLabel& chi) const {
  const std::string p = params_string(chi);
  return p.empty() ? kind_name(chi) : kind_name(chi) + "(" + p + ")";
}

}  // namespace pstlie
