#pragma once

// The orbital scheme GL(2,q²)⫽GL(2,q) for q ≡ 3 (mod 4) and the graph Γ_q
// whose vertices are the cosets G/H.
//
// Notation: G = GL(2,q²), H = GL(2,q) as the Frobenius-fixed matrices,
// z = ζ·I with ζ the order-4 element of F_{q²}^× with the smallest log, and
// RepSet = {gen^i : 0 ≤ i ≤ q}, a transversal of F_q^× in F_{q²}^×.
// Characters of G are GL(2,q²) labels (see group.hpp); a principal series
// label with indices j1 < j2 stands for I[θ_{j1}, θ_{j2}].

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pstlie/cycsum.hpp"
#include "pstlie/graph.hpp"
#include "pstlie/group.hpp"
#include "pstlie/scheme.hpp"

namespace pstlie {

/// Class of g^{-1}F(g) in GL(2,q²); F is the entrywise q-power map.
using DoubleCosetLabel = ClassLabel;

class OrbitalGroup {
 public:
  /// Throws std::invalid_argument unless q is an odd prime power with
  /// q ≡ 3 (mod 4).
  explicit OrbitalGroup(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  const LieGroup& G() const { return G_; }
  /// F_{q²}, the entry field of G.
  const FiniteField& field() const { return G_.matrix_field(); }
  std::uint64_t order_G() const { return G_.order(); }
  std::uint64_t order_H() const;
  std::uint64_t coset_count() const { return order_G() / order_H(); }

  bool in_subfield(FieldElement x) const;
  bool in_H(const Mat2& g) const;
  Mat2 frobenius(const Mat2& g) const;
  DoubleCosetLabel double_coset_of(const Mat2& g) const;

  std::uint32_t zeta_log() const { return (q_ * q_ - 1) / 4; }
  Mat2 z() const;
  /// Logs of the RepSet elements: 0, 1, ..., q.
  std::vector<std::int64_t> rep_set() const;
  /// diag(gen^xl, gen^yl).
  Mat2 m(std::int64_t xl, std::int64_t yl) const;
  /// Elements of H in lexicographic order. Throws BoundExceeded past bound.
  std::vector<Mat2> enumerate_H(std::uint64_t bound = kDefaultGroupBound) const;

 private:
  std::uint32_t q_;
  LieGroup G_;
};

struct CosetSpace {
  std::shared_ptr<const OrbitalGroup> group;
  bool explicit_mode = false;
  /// Cosets numbered by first appearance in the lexicographic enumeration
  /// of G; the representative is that first element. Empty unless explicit.
  std::vector<Mat2> representatives;
  std::vector<Mat2> elements;                  // all of G, lexicographic
  std::vector<std::uint32_t> coset_of_element;

  std::uint32_t size() const { return static_cast<std::uint32_t>(representatives.size()); }
  /// Coset index of g. Requires explicit mode.
  std::uint32_t coset_of(const Mat2& g) const;
};

/// Explicit when |G| ≤ bound, character-sum-only otherwise. Throws
/// std::invalid_argument for q ≢ 3 (mod 4).
CosetSpace build_coset_space(std::uint32_t q, std::uint64_t bound = kDefaultGroupBound);

/// Literal H-orbits on G/H against the Frobenius invariant.
struct DoubleCosetCheck {
  std::uint32_t literal_count = 0;
  std::uint32_t invariant_count = 0;
  std::uint64_t elements_checked = 0;
  bool matches = false;
  std::string witness;
};

DoubleCosetCheck check_double_cosets(const CosetSpace& cs);

struct OrbitalGraph {
  Graph graph;
  bool includes_z = true;
  std::uint32_t identity_vertex = 0;  // the coset H
  std::uint32_t z_vertex = 0;         // the coset zH
  std::vector<DoubleCosetLabel> connection;
};

/// Γ_q: rH ~ sH iff r^{-1}s lies in HzH or in some Hm_{x,y}H, x ≠ y in RepSet.
OrbitalGraph build_gamma(const CosetSpace& cs, bool include_z = true);

struct OrbitalRelations {
  SchemeRelationSet scheme;            // relation 0 is the diagonal
  std::vector<DoubleCosetLabel> labels;
  std::vector<Mat2> representatives;   // one element of each double coset
};

OrbitalRelations orbital_relations(const CosetSpace& cs);
Eigen::MatrixXi relation_matrix(const CosetSpace& cs, const DoubleCosetLabel& d);

/// d H d^{-1} = H, checked element by element.
bool normalizes_H(const OrbitalGroup& og, const Mat2& d);

/// Points of the projective line: field codes 0..q²-1, then q² for ∞.
std::uint32_t infinity_point(const OrbitalGroup& og);

/// M_θ(β, α) from the three-case closed formula.
std::vector<std::vector<CycSum>> m_theta(const OrbitalGroup& og, std::int64_t j1, std::int64_t j2);
/// M_θ(β, α) = Σ_{h ∈ H, σ_h(α) = β} θ(b(h, α)), summed over H.
std::vector<std::vector<CycSum>> m_theta_literal(const OrbitalGroup& og, std::int64_t j1, std::int64_t j2);

/// I[θ_{j1}, θ_{j2}](g) from the action on the projective line: the sum of
/// θ1(b11)θ2(b22) over fixed points, where g ω_α = ω_α b.
CycSum induced_character(const OrbitalGroup& og, std::int64_t j1, std::int64_t j2, const Mat2& g);

/// The members of Irr(G⫽H): λ and S_λ with λ^{q+1} = 1, I[θ1, θ2] with both
/// trivial on F_q^×, and I[θ2^{-q}, θ2] with θ2 nontrivial on F_q^×.
std::vector<IrrLabel> double_quotient_characters(const OrbitalGroup& og);

/// χ(gH) = Σ_{h ∈ H} χ(gh) in closed form, for g = m_{x,y} with x^{-1}y ∉ F_q
/// or g central outside H. Throws std::invalid_argument otherwise.
CycSum coset_char_sum(const OrbitalGroup& og, const IrrLabel& chi, const Mat2& g);
/// The same sum taken literally over H, with χ from the projective-line
/// model (linear, Steinberg, principal) or from the character table.
CycSum coset_char_sum_literal(const OrbitalGroup& og, const IrrLabel& chi, const Mat2& g);

/// ⟨1, I[θ]|_H⟩ from the case analysis (0, 1 or 2).
int restriction_multiplicity(const OrbitalGroup& og, std::int64_t j1, std::int64_t j2);
/// (1/|H|) Σ_{h ∈ H} I[θ](h), literally.
std::int64_t restriction_multiplicity_literal(const OrbitalGroup& og, std::int64_t j1, std::int64_t j2);
/// Σ_{h ∈ H} χ(h) from the character table of G.
CycSum restriction_sum(const OrbitalGroup& og, const IrrLabel& chi);

struct OrbitalRow {
  IrrLabel chi;
  std::uint64_t degree = 0;        // also the multiplicity of θ in Γ_q
  std::int64_t e = 0;              // eigenvalue of the m-type part
  int sign = 1;                    // eigenvalue of A_z
  std::int64_t theta = 0;          // sign + e (or e without A_z)
};

struct OrbitalSpectrum {
  std::uint32_t q = 0;
  bool includes_z = true;
  std::vector<OrbitalRow> rows;
};

/// 𝓔_χ = ½ Σ_{x ≠ y ∈ RepSet} χ(m_{x,y}H) / (q-1)², exactly. Throws
/// NonIntegralValue naming χ if some 𝓔_χ is not an integer.
std::int64_t orbital_eigenvalue(const OrbitalGroup& og, const IrrLabel& chi);
OrbitalSpectrum orbital_spectrum(const OrbitalGroup& og, bool include_z = true);

std::vector<EigenRow> eigen_rows(const OrbitalGroup& og, const OrbitalSpectrum& os);
PstCertificate certify_orbital(const OrbitalGroup& og, const OrbitalSpectrum& os);

/// The closed form q(q+1)/2 · ([λ,λ](F^× × F^×) - 2λ(S)) for a linear λ in
/// Irr(G⫽H), set against the direct value of 𝓔_λ.
struct LinearDisplayCheck {
  IrrLabel chi;
  std::int64_t display_value = 0;
  std::int64_t direct_value = 0;
  /// The display with the full-group sum scaled by 1/(q-1)² and the square
  /// sum by 1/(q-1).
  std::int64_t rescaled_value = 0;
  bool agrees() const { return display_value == direct_value; }
};

std::vector<LinearDisplayCheck> linear_display_checks(const OrbitalGroup& og, const OrbitalSpectrum& os);

}  // namespace pstlie
