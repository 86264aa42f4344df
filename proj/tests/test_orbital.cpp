#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include <Eigen/Eigenvalues>

#include "pstlie/errors.hpp"
#include "pstlie/orbital.hpp"

using namespace pstlie;

namespace {

const CosetSpace& space3() {
  static const CosetSpace cs = build_coset_space(3);
  return cs;
}

}  // namespace

TEST(OrbitalGroup, RejectsUnsupportedQ) {
  EXPECT_THROW(OrbitalGroup(5), std::invalid_argument);
  EXPECT_THROW(OrbitalGroup(9), std::invalid_argument);
  EXPECT_THROW(OrbitalGroup(15), std::invalid_argument);
  EXPECT_THROW(build_coset_space(13), std::invalid_argument);
}

TEST(OrbitalGroup, OrdersAndDistinguishedElements) {
  for (std::uint32_t q : {3u, 7u, 11u}) {
    const OrbitalGroup og(q);
    const std::uint64_t Q = q;
    EXPECT_EQ(og.order_H(), Q * (Q - 1) * (Q - 1) * (Q + 1));
    EXPECT_EQ(og.coset_count(), Q * (Q + 1) * (Q * Q + 1));
    const FiniteField& F = og.field();
    const FieldElement zeta = og.z().a;
    EXPECT_EQ(F.pow(zeta, 2), F.minus_one());
    EXPECT_FALSE(og.in_H(og.z()));
    EXPECT_TRUE(og.in_H(mat_mul(F, og.z(), og.z())));
    const auto reps = og.rep_set();
    ASSERT_EQ(reps.size(), q + 1);
    // Distinct classes modulo F_q^×.
    std::set<std::int64_t> residues;
    for (std::int64_t l : reps) residues.insert(l % (q + 1));
    EXPECT_EQ(residues.size(), q + 1);
  }
}

TEST(OrbitalGroup, SubgroupHIsTheFrobeniusFixedPart) {
  const OrbitalGroup og(3);
  const auto H = og.enumerate_H();
  EXPECT_EQ(H.size(), og.order_H());
  for (const Mat2& h : H) {
    ASSERT_TRUE(og.in_H(h));
    ASSERT_EQ(og.frobenius(h), h);
  }
}

TEST(OrbitalGroup, DoubleCosetInvariantOnExamples) {
  const OrbitalGroup og(3);
  const FiniteField& F = og.field();
  const std::int64_t N = 8;
  for (const Mat2& h : og.enumerate_H()) ASSERT_EQ(og.double_coset_of(h), og.G().identity_class());
  EXPECT_EQ(og.double_coset_of(og.z()), (ClassLabel{Family::GL, ClassKind::Central, N / 2, 0}));
  for (std::int64_t x : og.rep_set())
    for (std::int64_t y : og.rep_set()) {
      if (x == y) continue;
      const std::int64_t a = (x * 2) % N, b = (y * 2) % N;
      ASSERT_EQ(og.double_coset_of(og.m(x, y)), og.G().classify(mat_mul(F, mat_inv(F, og.m(x, y)), og.frobenius(og.m(x, y)))));
      const ClassLabel c = og.double_coset_of(og.m(x, y));
      EXPECT_EQ(c.kind, ClassKind::Split);
      EXPECT_EQ(c.p1, std::min(a, b));
      EXPECT_EQ(c.p2, std::max(a, b));
    }
}

TEST(CosetSpace, ExplicitOnlyWithinTheBound) {
  const CosetSpace& cs = space3();
  EXPECT_TRUE(cs.explicit_mode);
  EXPECT_EQ(cs.size(), 120u);
  EXPECT_EQ(cs.elements.size(), 5760u);
  std::map<std::uint32_t, std::uint32_t> counts;
  for (std::uint32_t c : cs.coset_of_element) ++counts[c];
  EXPECT_EQ(counts.size(), 120u);
  for (const auto& [c, n] : counts) EXPECT_EQ(n, 48u);
  const OrbitalGroup& og = *cs.group;
  const FiniteField& F = og.field();
  for (std::uint32_t i = 0; i < cs.elements.size(); i += 37) {
    const Mat2& g = cs.elements[i];
    const Mat2& r = cs.representatives[cs.coset_of(g)];
    ASSERT_TRUE(og.in_H(mat_mul(F, mat_inv(F, r), g)));
  }
  EXPECT_FALSE(build_coset_space(7).explicit_mode);
}

TEST(CosetSpace, DoubleCosetsMatchTheInvariant) {
  const DoubleCosetCheck d = check_double_cosets(space3());
  EXPECT_TRUE(d.matches) << d.witness;
  EXPECT_EQ(d.literal_count, 16u);
  EXPECT_EQ(d.invariant_count, 16u);
  EXPECT_EQ(d.elements_checked, 5760u);
}

TEST(Gamma, StructureAtThree) {
  const OrbitalGraph g = build_gamma(space3());
  const std::uint32_t q = 3;
  EXPECT_EQ(g.graph.regular_degree(), 1 + static_cast<std::int64_t>((q + 1) * q / 2 * q * (q + 1)));
  EXPECT_EQ(g.graph.edge_count(), 4380u);
  EXPECT_TRUE(g.graph.is_connected());
  EXPECT_TRUE(g.graph.is_symmetric());
  EXPECT_FALSE(g.graph.has_loops());
  EXPECT_TRUE(g.graph.has_edge(g.identity_vertex, g.z_vertex));
  const OrbitalGraph d = build_gamma(space3(), false);
  EXPECT_EQ(d.graph.regular_degree(), g.graph.regular_degree() - 1);
  EXPECT_FALSE(d.graph.has_edge(d.identity_vertex, d.z_vertex));
}

TEST(Gamma, ExactSpectrumMatchesNumericEigenvalues) {
  const OrbitalGraph g = build_gamma(space3());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(g.graph.n, g.graph.n);
  for (std::uint32_t u = 0; u < g.graph.n; ++u)
    for (std::uint32_t v : g.graph.adj[u]) A(u, v) = 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
  ASSERT_EQ(es.info(), Eigen::Success);
  std::vector<double> numeric(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::vector<double> exact;
  const OrbitalSpectrum os = orbital_spectrum(OrbitalGroup(3));
  for (const OrbitalRow& r : os.rows) exact.insert(exact.end(), r.degree, static_cast<double>(r.theta));
  std::sort(exact.begin(), exact.end());
  ASSERT_EQ(numeric.size(), exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i) EXPECT_NEAR(numeric[i], exact[i], 1e-8);
}

TEST(Scheme, OrbitalRelationsFormACommutativeScheme) {
  const CosetSpace& cs = space3();
  const OrbitalRelations rel = orbital_relations(cs);
  EXPECT_EQ(rel.labels.size(), 16u);
  const AxiomReport ax = verify_axioms(rel.scheme);
  EXPECT_TRUE(ax.ok) << ax.witness;
  const OrbitalGroup& og = *cs.group;
  int perms = 0;
  for (std::size_t k = 0; k < rel.labels.size(); ++k) {
    const bool perm = is_permutation_matrix(rel.scheme.relations[k]);
    EXPECT_EQ(perm, normalizes_H(og, rel.representatives[k])) << k;
    perms += perm;
  }
  EXPECT_GE(perms, 2);
  const Eigen::MatrixXi Az = relation_matrix(cs, og.double_coset_of(og.z()));
  EXPECT_TRUE(is_fixed_point_free_involution(Az));
}

TEST(Characters, ProjectiveLineModelMatchesTheTable) {
  const OrbitalGroup og(3);
  for (const IrrLabel& chi : og.G().characters()) {
    if (chi.kind != IrrKind::Principal) continue;
    for (const ClassLabel& c : og.G().classes())
      ASSERT_EQ(induced_character(og, chi.p1, chi.p2, og.G().representative(c)), og.G().char_value(chi, c))
          << og.G().char_name(chi) << " at " << og.G().class_name(c);
  }
  EXPECT_EQ(infinity_point(og), 9u);
}

TEST(Characters, ClosedFormsAgreeWithLiteralSums) {
  const OrbitalGroup og(3);
  for (std::int64_t j1 = 0; j1 < 8; ++j1)
    for (std::int64_t j2 = 0; j2 < 8; ++j2) {
      EXPECT_EQ(restriction_multiplicity(og, j1, j2), restriction_multiplicity_literal(og, j1, j2)) << j1 << "," << j2;
      const auto A = m_theta(og, j1, j2), B = m_theta_literal(og, j1, j2);
      ASSERT_EQ(A.size(), B.size());
      for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t k = 0; k < A.size(); ++k) ASSERT_EQ(A[i][k], B[i][k]) << j1 << "," << j2;
    }
  for (const IrrLabel& chi : double_quotient_characters(og)) {
    for (std::int64_t x : og.rep_set())
      for (std::int64_t y : og.rep_set())
        if (x != y) ASSERT_EQ(coset_char_sum(og, chi, og.m(x, y)), coset_char_sum_literal(og, chi, og.m(x, y)));
    ASSERT_EQ(coset_char_sum(og, chi, og.z()), coset_char_sum_literal(og, chi, og.z()));
  }
}

TEST(Characters, CuspidalsHaveNoHFixedVector) {
  const OrbitalGroup og(3);
  for (const IrrLabel& chi : og.G().characters())
    if (chi.kind == IrrKind::Cuspidal) EXPECT_EQ(restriction_sum(og, chi), CycSum()) << og.G().char_name(chi);
}

TEST(Characters, DoubleQuotientIsMultiplicityFree) {
  // Σ χ(1) over Irr(G⫽H) = |G/H| and every member occurs once in 1_H^G.
  for (std::uint32_t q : {3u, 7u}) {
    const OrbitalGroup og(q);
    const auto chars = double_quotient_characters(og);
    std::uint64_t total = 0;
    for (const IrrLabel& chi : chars) {
      total += og.G().degree(chi);
      EXPECT_EQ(integer_part(restriction_sum(og, chi)), static_cast<std::int64_t>(og.order_H())) << og.G().char_name(chi);
    }
    EXPECT_EQ(total, og.coset_count());
    EXPECT_EQ(std::set<IrrLabel>(chars.begin(), chars.end()).size(), chars.size());
  }
}

TEST(Spectrum, CertificateForSeveralQ) {
  for (std::uint32_t q : {3u, 7u, 11u}) {
    const OrbitalGroup og(q);
    const OrbitalSpectrum os = orbital_spectrum(og);
    const PstCertificate c = certify_orbital(og, os);
    EXPECT_TRUE(c.valid) << "q = " << q;
    EXPECT_EQ(c.g, 2);
    for (const OrbitalRow& r : os.rows) {
      EXPECT_EQ(r.theta, r.sign + r.e);
      EXPECT_EQ(r.e % 4, 0) << og.G().char_name(r.chi);
    }
  }
}

TEST(Spectrum, ValuesAtThree) {
  const OrbitalGroup og(3);
  const OrbitalSpectrum os = orbital_spectrum(og);
  EXPECT_EQ(os.rows.size(), 16u);
  std::map<IrrLabel, std::int64_t> e;
  for (const OrbitalRow& r : os.rows) e[r.chi] = r.e;
  EXPECT_EQ((e[{Family::GL, IrrKind::Linear, 0, 0}]), 72);
  EXPECT_EQ((e[{Family::GL, IrrKind::Linear, 4, 0}]), -24);
  EXPECT_EQ((e[{Family::GL, IrrKind::Steinberg, 0, 0}]), 12);
  EXPECT_EQ((e[{Family::GL, IrrKind::Steinberg, 4, 0}]), -4);
  EXPECT_EQ((e[{Family::GL, IrrKind::Principal, 2, 6}]), -12);
}

TEST(Spectrum, WithoutZTheInvolutionIsMissing) {
  const OrbitalGroup og(3);
  const PstCertificate c = certify_orbital(og, orbital_spectrum(og, false));
  EXPECT_FALSE(c.involution_present);
  EXPECT_FALSE(c.valid);
}

TEST(Spectrum, LinearDisplayIsOffByAScale) {
  const OrbitalGroup og(3);
  const auto checks = linear_display_checks(og, orbital_spectrum(og));
  ASSERT_FALSE(checks.empty());
  for (const LinearDisplayCheck& d : checks) {
    EXPECT_EQ(d.rescaled_value, d.direct_value) << og.G().char_name(d.chi);
    if (d.direct_value != 0) EXPECT_FALSE(d.agrees());
  }
}
