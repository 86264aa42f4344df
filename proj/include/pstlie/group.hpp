#pragma once

// GL(2,q), GU(2,q) and SL(2,q): matrices, conjugacy classes and character
// tables evaluated exactly.
//
// Class parameters are discrete logs:
//   GL  central/unipotent: base log of x; split: base logs p1 < p2;
//       nonsplit: ext log b of z, canonical min(b, qb mod q²-1).
//   GU  central/unipotent: ext log of x ∈ E; split: ext logs p1 < p2;
//       nonsplit: ext log b of z ∉ E, canonical min(b, -qb mod q²-1).
//   SL  central: base log of ±1; unipotent: p1 = base log of ±1, p2 = 0 for
//       the class of [[1,1],[0,1]]·(±1) and 1 for the Δ class; split:
//       base log a of x, canonical min(a, -a); nonsplit: ext log b of
//       z ∈ E, canonical min(b, -b).
//
// Character parameters are indices against the recorded generators:
//   GL  linear/Steinberg j ∈ Z/(q-1); principal j1 < j2; cuspidal m ∈
//       Z/(q²-1) with m ≢ 0 mod q+1, canonical min(m, qm).
//   GU  linear/Steinberg j ∈ Z/(q+1) (characters of E); principal j1 < j2;
//       cuspidal m with m ≢ 0 mod q-1, canonical min(m, -qm).
//   SL  principal I[λ]: j ∈ [1, (q-1)/2); cuspidal P[μ]: E-index j ∈
//       [1, (q+1)/2); half characters U±, Z± carry p1 = ±1.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pstlie/cycsum.hpp"
#include "pstlie/gf.hpp"

namespace pstlie {

enum class Family { GL, GU, SL };
std::string to_string(Family f);
Family family_from_string(const std::string& s);

inline constexpr std::uint64_t kDefaultGroupBound = 10000;

struct Mat2 {
  FieldElement a, b, c, d;  // [[a, b], [c, d]]
  friend constexpr auto operator<=>(const Mat2&, const Mat2&) = default;
};

Mat2 mat_identity(const FiniteField& F);
Mat2 mat_scalar(FieldElement x);
Mat2 mat_mul(const FiniteField& F, const Mat2& x, const Mat2& y);
FieldElement mat_det(const FiniteField& F, const Mat2& m);
FieldElement mat_trace(const FiniteField& F, const Mat2& m);
Mat2 mat_inv(const FiniteField& F, const Mat2& m);
/// Entrywise x ↦ x^e.
Mat2 mat_entry_pow(const FiniteField& F, const Mat2& m, std::int64_t e);
/// Transpose followed by entrywise x ↦ x^e.
Mat2 mat_conj_transpose(const FiniteField& F, const Mat2& m, std::int64_t e);
std::string mat_to_string(const FiniteField& F, const Mat2& m);

enum class ClassKind { Central, Unipotent, Split, Nonsplit };

struct ClassLabel {
  Family family = Family::GL;
  ClassKind kind = ClassKind::Central;
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  friend constexpr auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

enum class IrrKind { Linear, Steinberg, Cuspidal, Principal, HalfCuspidal, HalfPrincipal };

struct IrrLabel {
  Family family = Family::GL;
  IrrKind kind = IrrKind::Linear;
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  friend constexpr auto operator<=>(const IrrLabel&, const IrrLabel&) = default;
};

/// Class size as tabulated for the family.
std::uint64_t class_size(const ClassLabel& c, std::uint32_t q);
std::uint64_t group_order(Family f, std::uint32_t q);

class LieGroup {
 public:
  LieGroup(Family family, FieldTower tower);
  static LieGroup make(Family family, std::uint32_t q);

  Family family() const { return family_; }
  std::uint32_t q() const { return tower_.q(); }
  const FieldTower& tower() const { return tower_; }
  /// Field holding the matrix entries: F_q for GL and SL, F_{q²} for GU.
  const FiniteField& matrix_field() const;
  std::uint64_t order() const { return group_order(family_, q()); }

  const std::vector<ClassLabel>& classes() const { return classes_; }
  std::uint64_t class_size(const ClassLabel& c) const { return pstlie::class_size(c, q()); }
  bool contains(const Mat2& g) const;
  /// Canonical class of g. Throws std::invalid_argument if g is not in the group.
  ClassLabel classify(const Mat2& g) const;
  Mat2 representative(const ClassLabel& c) const;
  ClassLabel inverse_class(const ClassLabel& c) const;
  ClassLabel identity_class() const;
  ClassLabel central_involution_class() const;
  Mat2 central_involution() const;
  std::uint64_t element_order(const Mat2& g) const;

  /// All elements in lexicographic order of entry codes.
  std::vector<Mat2> enumerate(std::uint64_t bound = kDefaultGroupBound) const;

  const std::vector<IrrLabel>& characters() const { return characters_; }
  std::uint64_t degree(const IrrLabel& chi) const;
  /// Tabulated value. For SL, U± and Z± are tabulated only on ±I and the
  /// four unipotent classes; other requests throw UntabulatedValue.
  CycSum char_value(const IrrLabel& chi, const ClassLabel& c) const;
  /// Like char_value, but completes the SL table on the semisimple classes.
  CycSum full_char_value(const IrrLabel& chi, const ClassLabel& c) const;
  /// Sign of χ at the central involution: χ(t)/χ(1) ∈ {±1}.
  int central_sign(const IrrLabel& chi) const;

  std::string class_name(const ClassLabel& c) const;
  static std::string kind_name(const IrrLabel& chi);
  static std::string params_string(const IrrLabel& chi);
  std::string char_name(const IrrLabel& chi) const;

 private:
  void build_classes();
  void build_characters();
  CycSum value_gl(const IrrLabel& chi, const ClassLabel& c) const;
  CycSum value_gu(const IrrLabel& chi, const ClassLabel& c) const;
  CycSum value_sl(const IrrLabel& chi, const ClassLabel& c, bool full) const;
  CycSum half_value(const IrrLabel& chi, const ClassLabel& c, bool full) const;

  Family family_;
  FieldTower tower_;
  std::vector<ClassLabel> classes_;
  std::vector<IrrLabel> characters_;
  struct RepCache;
  std::shared_ptr<RepCache> rep_cache_;
};

}  // namespace pstlie
