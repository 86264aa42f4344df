#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "pstlie/cayley.hpp"
#include "pstlie/errors.hpp"

using namespace pstlie;

namespace {

std::vector<std::int64_t> numeric_spectrum(const Graph& g) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(g.n, g.n);
  for (std::uint32_t u = 0; u < g.n; ++u)
    for (std::uint32_t v : g.adj[u]) A(u, v) = 1.0;
  // Shifted by 1/2: the unshifted QR iteration stalls on GL(2,5).
  A.diagonal().array() += 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
  EXPECT_EQ(es.info(), Eigen::Success);
  std::vector<std::int64_t> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double v = es.eigenvalues()(i) - 0.5;
    EXPECT_NEAR(v, std::round(v), 1e-8);
    out.push_back(static_cast<std::int64_t>(std::round(v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> exact_spectrum(const SpectrumTable& st) {
  std::vector<std::int64_t> out;
  for (const SpectrumRow& r : st.rows) out.insert(out.end(), r.multiplicity, r.theta);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t mod4(std::int64_t x) { return ((x % 4) + 4) % 4; }

struct FQ {
  Family f;
  std::uint32_t q;
};

std::string name(const ::testing::TestParamInfo<FQ>& info) {
  return to_string(info.param.f) + std::to_string(info.param.q);
}

class Enumerable : public ::testing::TestWithParam<FQ> {};

}  // namespace

TEST_P(Enumerable, ExactSpectrumMatchesTheExplicitGraph) {
  const LieGroup G = LieGroup::make(GetParam().f, GetParam().q);
  const ConnectionSet cs = build_connection_set(G);
  const SpectrumTable st = spectrum(G, cs);
  const Graph g = explicit_graph(G, cs);
  EXPECT_EQ(g.regular_degree(), static_cast<std::int64_t>(cs.size));
  EXPECT_TRUE(g.is_symmetric());
  EXPECT_FALSE(g.has_loops());
  EXPECT_EQ(numeric_spectrum(g), exact_spectrum(st));
}

TEST_P(Enumerable, ConnectionSetIsClosedAndAvoidsTheIdentity) {
  const LieGroup G = LieGroup::make(GetParam().f, GetParam().q);
  const ConnectionSet cs = build_connection_set(G);
  EXPECT_TRUE(is_inverse_closed(G, cs));
  EXPECT_FALSE(contains_identity(G, cs));
  std::uint64_t total = 0;
  for (const ClassLabel& c : cs.classes) total += G.class_size(c);
  EXPECT_EQ(total, cs.size);
}

TEST_P(Enumerable, InvolutionPartnerIsMultiplicationByMinusOne) {
  const LieGroup G = LieGroup::make(GetParam().f, GetParam().q);
  const auto els = G.enumerate();
  const auto partner = involution_partner(G);
  const FiniteField& F = G.matrix_field();
  for (std::uint32_t x = 0; x < els.size(); ++x) {
    ASSERT_NE(partner[x], x);
    ASSERT_EQ(partner[partner[x]], x);
    ASSERT_EQ(els[partner[x]], mat_mul(F, els[x], mat_scalar(F.minus_one())));
  }
}

INSTANTIATE_TEST_SUITE_P(Cayley, Enumerable,
                         ::testing::Values(FQ{Family::GL, 3}, FQ{Family::GU, 3}, FQ{Family::SL, 3}, FQ{Family::GL, 5},
                                           FQ{Family::GU, 5}, FQ{Family::SL, 5}, FQ{Family::SL, 7}),
                         name);

class AllQ : public ::testing::TestWithParam<FQ> {};

TEST_P(AllQ, CertificateAndResidues) {
  const LieGroup G = LieGroup::make(GetParam().f, GetParam().q);
  const SpectrumTable st = spectrum(G, build_connection_set(G));
  const PstCertificate c = certify(G, st);
  EXPECT_TRUE(c.valid) << (c.failures.empty() ? "" : c.failures.front());
  EXPECT_EQ(c.g, 2);
  EXPECT_NEAR(c.tau, std::numbers::pi / 2, 1e-15);
  const bool sl = GetParam().f == Family::SL;
  EXPECT_EQ(c.a, sl ? 1 : 2);
  for (const SpectrumRow& r : st.rows) {
    if (sl)
      EXPECT_EQ(mod4(r.theta), mod4(r.sign)) << G.char_name(r.chi);
    else
      EXPECT_EQ(mod4(r.theta), r.sign > 0 ? 2 : 0) << G.char_name(r.chi);
  }
}

INSTANTIATE_TEST_SUITE_P(Cayley, AllQ,
                         ::testing::Values(FQ{Family::GL, 3}, FQ{Family::GL, 5}, FQ{Family::GL, 7}, FQ{Family::GL, 9},
                                           FQ{Family::GL, 11}, FQ{Family::GU, 3}, FQ{Family::GU, 5}, FQ{Family::GU, 7},
                                           FQ{Family::GU, 9}, FQ{Family::SL, 3}, FQ{Family::SL, 5}, FQ{Family::SL, 7},
                                           FQ{Family::SL, 9}, FQ{Family::SL, 11}, FQ{Family::SL, 13}),
                         name);

TEST(Cayley, GlThreeIsTheComplementOfAPerfectMatching) {
  const LieGroup G = LieGroup::make(Family::GL, 3);
  const ConnectionSet cs = build_connection_set(G);
  EXPECT_EQ(cs.size, 46u);
  const Graph g = explicit_graph(G, cs);
  const auto partner = involution_partner(G);
  for (std::uint32_t x = 0; x < g.n; ++x)
    for (std::uint32_t y = 0; y < g.n; ++y) ASSERT_EQ(g.has_edge(x, y), x != y && y != partner[x]);
  std::map<std::int64_t, std::uint64_t> mult;
  for (const SpectrumRow& r : spectrum(G, cs).rows) mult[r.theta] += r.multiplicity;
  EXPECT_EQ(mult, (std::map<std::int64_t, std::uint64_t>{{-2, 23}, {0, 24}, {46, 1}}));
}

TEST(Cayley, GlSizesFromTraceAndDeterminant) {
  // S: eigenvalues {1, -1}, a repeated eigenvalue without being scalar, or
  // irreducible with determinant 1 or a non-square.
  for (std::uint32_t q : {3u, 5u}) {
    const LieGroup G = LieGroup::make(Family::GL, q);
    const FiniteField& F = G.matrix_field();
    std::uint64_t count = 0;
    for (const Mat2& g : G.enumerate()) {
      const FieldElement tr = mat_trace(F, g), det = mat_det(F, g);
      const FieldElement disc = F.sub(F.mul(tr, tr), F.mul(F.from_int(4), det));
      const bool scalar = g.b.is_zero() && g.c.is_zero() && g.a == g.d;
      if (tr.is_zero() && det == F.minus_one())
        ++count;
      else if (disc.is_zero() && !scalar)
        ++count;
      else if (!disc.is_zero() && !F.is_square(disc) && (det == F.one() || !F.is_square(det)))
        ++count;
    }
    EXPECT_EQ(count, build_connection_set(G).size) << "q = " << q;
  }
  EXPECT_EQ(build_connection_set(LieGroup::make(Family::GL, 5)).size, 286u);
}

TEST(Cayley, DegreesAcrossFamilies) {
  EXPECT_EQ(build_connection_set(LieGroup::make(Family::GU, 3)).size, 62u);
  EXPECT_EQ(build_connection_set(LieGroup::make(Family::GU, 5)).size, 374u);
  for (std::uint32_t q : {3u, 5u, 7u, 9u})
    EXPECT_EQ(build_connection_set(LieGroup::make(Family::SL, q)).size, 1 + 2 * (q * q - 1));
}

TEST(Cayley, SlOrderBasedSetCoincides) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const LieGroup G = LieGroup::make(Family::SL, q);
    const ConnectionSet cs = build_connection_set(G);
    EXPECT_TRUE(order_based_sl_matches(G, cs));
    EXPECT_EQ(order_based_sl_count(G), cs.size);
  }
}

TEST(Cayley, AlternativeSetOnGlThree) {
  const LieGroup G = LieGroup::make(Family::GL, 3);
  const ConnectionSet cs = build_connection_set(G, Variant::TAlternative);
  std::uint64_t count = 0;
  for (const Mat2& g : G.enumerate()) {
    const bool central = g.b.is_zero() && g.c.is_zero() && g.a == g.d;
    const std::uint64_t o = G.element_order(g);
    if (!central && (o == 2 || o == 3 || o == 4 || o == 6)) ++count;
  }
  EXPECT_EQ(cs.size, count);
  EXPECT_EQ(cs.size, 34u);
  const Graph g = explicit_graph(G, cs);
  EXPECT_TRUE(g.is_connected());
  const SpectrumTable st = spectrum(G, cs);
  EXPECT_EQ(numeric_spectrum(g), exact_spectrum(st));
  const PstCertificate c = certify(G, st);
  EXPECT_TRUE(c.valid);
  EXPECT_TRUE(c.connected);
  EXPECT_THROW(build_connection_set(LieGroup::make(Family::GL, 5), Variant::TAlternative), std::invalid_argument);
}

TEST(Cayley, NonRealConnectionSetIsRejected) {
  const LieGroup G = LieGroup::make(Family::GL, 3);
  ConnectionSet cs;
  cs.family = Family::GL;
  cs.q = 3;
  for (const ClassLabel& c : G.classes())
    if (c.kind == ClassKind::Nonsplit && G.inverse_class(c) != c) {
      cs.classes.push_back(c);
      cs.size = G.class_size(c);
      break;
    }
  ASSERT_FALSE(cs.classes.empty());
  EXPECT_FALSE(is_inverse_closed(G, cs));
  EXPECT_THROW(spectrum(G, cs), NonIntegralValue);
}

TEST(ClosedForms, GlLinearCuspidalAndPrincipalRowsAgree) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const LieGroup G = LieGroup::make(Family::GL, q);
    for (const ClosedFormCheck& c : closed_form_checks(G, spectrum(G, build_connection_set(G)))) {
      if (c.chi.kind == IrrKind::Steinberg) continue;
      EXPECT_TRUE(c.agrees()) << "q = " << q << " " << G.char_name(c.chi) << ": " << c.closed_form << " vs " << c.class_sum;
    }
  }
}

TEST(ClosedForms, GlSteinbergRowsDisagreeButKeepTheResidue) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const LieGroup G = LieGroup::make(Family::GL, q);
    for (const ClosedFormCheck& c : closed_form_checks(G, spectrum(G, build_connection_set(G)))) {
      if (c.chi.kind != IrrKind::Steinberg) continue;
      EXPECT_FALSE(c.agrees()) << G.char_name(c.chi);
      EXPECT_EQ(mod4(c.closed_form), mod4(c.class_sum));
    }
  }
}

TEST(ClosedForms, GuLinearDiscrepancyAtThree) {
  const LieGroup G = LieGroup::make(Family::GU, 3);
  const auto checks = closed_form_checks(G, spectrum(G, build_connection_set(G)));
  std::map<std::int64_t, const ClosedFormCheck*> linear;
  for (const ClosedFormCheck& c : checks)
    if (c.chi.kind == IrrKind::Linear) linear[c.chi.p1] = &c;
  ASSERT_EQ(linear.size(), 4u);
  EXPECT_EQ(linear[0]->class_sum, 62);
  EXPECT_EQ(linear[0]->closed_form, 38);
  EXPECT_EQ(linear[2]->class_sum, 14);
  EXPECT_EQ(linear[2]->closed_form, 38);
  EXPECT_TRUE(linear[1]->agrees());
  EXPECT_TRUE(linear[3]->agrees());
  for (const auto& [j, c] : linear) EXPECT_EQ(mod4(c->closed_form), mod4(c->class_sum));
}

TEST(ClosedForms, GuCuspidalAndPrincipalRowsAgree) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const LieGroup G = LieGroup::make(Family::GU, q);
    for (const ClosedFormCheck& c : closed_form_checks(G, spectrum(G, build_connection_set(G)))) {
      if (c.chi.kind != IrrKind::Cuspidal && c.chi.kind != IrrKind::Principal) continue;
      EXPECT_TRUE(c.agrees()) << "q = " << q << " " << G.char_name(c.chi);
    }
  }
}

TEST(ClosedForms, SlFormulaHoldsForEveryRow) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u}) {
    const LieGroup G = LieGroup::make(Family::SL, q);
    const auto checks = closed_form_checks(G, spectrum(G, build_connection_set(G)));
    EXPECT_EQ(checks.size(), G.characters().size());
    for (const ClosedFormCheck& c : checks) EXPECT_TRUE(c.agrees()) << "q = " << q << " " << G.char_name(c.chi);
  }
}
