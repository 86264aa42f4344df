// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "pstlie/cayley.hpp"
#include "pstlie/ctqw.hpp"
#include "pstlie/errors.hpp"
#include "pstlie/orbital.hpp"
#include "pstlie/scheme.hpp"

using namespace pstlie;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::int64_t mod4(std::int64_t x) { return ((x % 4) + 4) % 4; }

std::vector<std::int64_t> expanded(const SpectrumTable& st) {
  std::vector<std::int64_t> out;
  for (const SpectrumRow& r : st.rows) out.insert(out.end(), r.multiplicity, r.theta);
  std::sort(out.begin(), out.end());
  return out;
}

double min_fidelity(const WalkSystem& ws, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs, double t) {
  double m = 1.0;
  for (const FidelityReport& f : pst_scan(ws, pairs, t)) m = std::min(m, f.fidelity);
  return m;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> all_pairs(const std::vector<std::uint32_t>& partner) {
  return sample_pairs(partner, true);
}

std::uint32_t index_of(const std::vector<Mat2>& els, const Mat2& g) {
  return static_cast<std::uint32_t>(std::lower_bound(els.begin(), els.end(), g) - els.begin());
}

// Signs of the permutation P on each eigenspace of A, read from tr(P E)/tr(E);
// pst_test on those, set against the walk at π/g.
struct Agreement {
  bool predicted = false;
  bool simulated = false;
};

Agreement pst_vs_simulation(const Graph& g, const std::vector<std::uint32_t>& partner, std::uint32_t a) {
  const WalkSystem ws = WalkSystem::from_graph(g);
  Agreement out;
  if (!ws.integral()) return out;
  const auto& shadow = ws.integer_shadow();
  const Eigen::MatrixXd& V = ws.eigenvectors();
  std::map<std::int64_t, std::vector<Eigen::Index>> spaces;
  for (Eigen::Index k = 0; k < V.cols(); ++k) spaces[shadow[k]].push_back(k);
  std::vector<EigenEntry> entries;
  bool signed_ok = true;
  for (const auto& [theta, cols] : spaces) {
    double tr = 0;
    for (Eigen::Index k : cols)
      for (std::uint32_t x = 0; x < g.n; ++x) tr += V(partner[x], k) * V(x, k);
    const double s = tr / static_cast<double>(cols.size());
    if (std::abs(std::abs(s) - 1.0) > 1e-8) signed_ok = false;
    entries.push_back({theta, s > 0 ? 1 : -1});
  }
  const std::int64_t theta0 = spaces.rbegin()->first;
  const PstVerdict v = pst_test(entries, theta0);
  out.predicted = signed_ok && v.pst;
  if (v.g > 0) out.simulated = std::abs(ws.amplitude(partner[a], a, std::numbers::pi / v.g)) >= 1 - kFidelityTolerance;
  return out;
}

bool orthogonal(const LieGroup& G) {
  const auto& chars = G.characters();
  std::uint64_t deg2 = 0;
  for (const IrrLabel& chi : chars) deg2 += G.degree(chi) * G.degree(chi);
  if (deg2 != G.order() || chars.size() != G.classes().size()) return false;
  const auto n = static_cast<std::int64_t>(G.order());
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = i; j < chars.size(); ++j) {
      CycSum s;
      for (const ClassLabel& c : G.classes())
        s += G.full_char_value(chars[i], c) * G.full_char_value(chars[j], c).conj() *
             static_cast<std::int64_t>(G.class_size(c));
      if (!is_integral(s) || integer_part(s) != (i == j ? n : 0)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

Outcome gl3() {
  Outcome o;
  const LieGroup G = LieGroup::make(Family::GL, 3);
  const ConnectionSet cs = build_connection_set(G);
  o.require(cs.size == 46, "|S| = 46");
  const auto els = G.enumerate();
  const Mat2 I = mat_identity(G.matrix_field()), t = G.central_involution();
  std::uint64_t outside = 0;
  for (const Mat2& g : els) {
    const ClassLabel c = G.classify(g);
    const bool in_s = std::find(cs.classes.begin(), cs.classes.end(), c) != cs.classes.end();
    if (in_s != (g != I && g != t)) ++outside;
  }
  o.require(outside == 0, "S = GL(2,3) minus {I, t}");
  const SpectrumTable st = spectrum(G, cs);
  std::map<std::int64_t, std::uint64_t> mult;
  for (const SpectrumRow& r : st.rows) mult[r.theta] += r.multiplicity;
  o.require(mult == std::map<std::int64_t, std::uint64_t>{{-2, 23}, {0, 24}, {46, 1}}, "spectrum {46^1, 0^24, -2^23}");
  const PstCertificate c = certify(G, st);
  o.require(c.valid && c.a == 2 && c.g == 2 && std::abs(c.tau - std::numbers::pi / 2) < 1e-15, "certificate a=2, g=2");
  const WalkSystem ws = WalkSystem::from_graph(explicit_graph(G, cs));
  o.require(ws.integer_shadow() == expanded(st), "numeric spectrum");
  o.require(min_fidelity(ws, all_pairs(involution_partner(G)), std::numbers::pi / 2) >= 1 - kFidelityTolerance,
            "fidelity on all 48 pairs");
  return o;
}

Outcome gl3_alternative() {
  Outcome o;
  const LieGroup G = LieGroup::make(Family::GL, 3);
  const ConnectionSet cs = build_connection_set(G, Variant::TAlternative);
  const Graph g = explicit_graph(G, cs);
  o.require(g.is_connected(), "connected");
  const PstCertificate c = certify(G, spectrum(G, cs));
  o.require(c.valid && c.condition_ii && c.parity_pst, "mod-4 conditions");
  const WalkSystem ws = WalkSystem::from_graph(g);
  o.require(min_fidelity(ws, all_pairs(involution_partner(G)), c.tau) >= 1 - kFidelityTolerance, "fidelity");
  return o;
}

Outcome gl5() {
  Outcome o;
  const LieGroup G = LieGroup::make(Family::GL, 5);
  const ConnectionSet cs = build_connection_set(G);
  const auto els = G.enumerate();
  o.require(els.size() == 480, "480 elements");
  std::uint64_t count = 0;
  for (const Mat2& g : els) {
    const ClassLabel c = G.classify(g);
    count += std::find(cs.classes.begin(), cs.classes.end(), c) != cs.classes.end();
  }
  o.require(count == 286 && cs.size == 286, "|S| = 286 by enumeration");
  SpectrumTable st;
  try {
    st = spectrum(G, cs);
  } catch (const NonIntegralValue& e) {
    o.require(false, std::string("integral spectrum: ") + e.what());
    return o;
  }
  for (const SpectrumRow& r : st.rows) o.require(mod4(r.theta) == (r.sign > 0 ? 2 : 0), "residue of " + G.char_name(r.chi));
  for (const ClosedFormCheck& f : closed_form_checks(G, st))
    if (f.chi.kind == IrrKind::Linear) o.require(f.agrees(), "linear closed form for " + G.char_name(f.chi));
  const PstCertificate c = certify(G, st);
  o.require(c.valid, "certificate");
  const WalkSystem ws = WalkSystem::from_graph(explicit_graph(G, cs), 1.0, 480);
  o.require(ws.integer_shadow() == expanded(st), "numeric spectrum");
  const auto partner = involution_partner(G);
  const auto pairs = sample_pairs(partner, false, index_of(els, mat_identity(G.matrix_field())));
  o.require(validate_transfer(ws, pairs, c.tau).max_deviation <= kFidelityTolerance, "fidelity on sampled pairs");
  return o;
}

Outcome sl35() {
  Outcome o;
  for (std::uint32_t q : {3u, 5u}) {
    const std::string at = " at q = " + std::to_string(q);
    const LieGroup G = LieGroup::make(Family::SL, q);
    const ConnectionSet cs = build_connection_set(G);
    o.require(cs.size == 1 + 2 * (q * q - 1), "degree" + at);
    o.require(order_based_sl_matches(G, cs), "order-based set" + at);
    const SpectrumTable st = spectrum(G, cs);
    o.require(st.rows.size() == G.characters().size(), "every character" + at);
    for (const SpectrumRow& r : st.rows) o.require(mod4(r.theta) == mod4(r.sign), "residue of " + G.char_name(r.chi) + at);
    const PstCertificate c = certify(G, st);
    o.require(c.valid, "certificate" + at);
    const WalkSystem ws = WalkSystem::from_graph(explicit_graph(G, cs));
    o.require(ws.integer_shadow() == expanded(st), "numeric spectrum" + at);
    o.require(min_fidelity(ws, all_pairs(involution_partner(G)), c.tau) >= 1 - kFidelityTolerance, "fidelity" + at);
  }
  return o;
}

Outcome gu35() {
  Outcome o;
  o.require(LieGroup::make(Family::GU, 3).enumerate().size() == 96, "|GU(2,3)| = 96");
  o.require(LieGroup::make(Family::GU, 5).enumerate().size() == 720, "|GU(2,5)| = 720");
  for (std::uint32_t q : {3u, 5u}) {
    const std::string at = " at q = " + std::to_string(q);
    const LieGroup G = LieGroup::make(Family::GU, q);
    const ConnectionSet cs = build_connection_set(G);
    const SpectrumTable st = spectrum(G, cs);
    for (const SpectrumRow& r : st.rows) o.require(mod4(r.theta) == (r.sign > 0 ? 2 : 0), "residue of " + G.char_name(r.chi) + at);
    bool linear_discrepancy = false;
    for (const ClosedFormCheck& f : closed_form_checks(G, st)) {
      if (f.chi.kind == IrrKind::Cuspidal || f.chi.kind == IrrKind::Principal)
        o.require(f.agrees(), "closed form for " + G.char_name(f.chi) + at);
      if (f.chi.kind == IrrKind::Linear && !f.agrees()) {
        linear_discrepancy = true;
        o.require(mod4(f.closed_form) == mod4(f.class_sum), "linear residue" + at);
      }
    }
    o.require(certify(G, st).valid, "certificate" + at);
    if (q != 3) continue;
    o.require(linear_discrepancy, "linear closed-form discrepancy detected at q = 3");
    const Graph g = explicit_graph(G, cs);
    o.require(g.regular_degree() == 62, "degree 62 by direct count");
    const WalkSystem ws = WalkSystem::from_graph(g);
    o.require(min_fidelity(ws, all_pairs(involution_partner(G)), std::numbers::pi / 2) >= 1 - kFidelityTolerance,
              "fidelity at q = 3");
  }
  return o;
}

Outcome orbital3() {
  Outcome o;
  const CosetSpace cs = build_coset_space(3);
  o.require(cs.explicit_mode && cs.size() == 120, "120 cosets");
  const DoubleCosetCheck d = check_double_cosets(cs);
  o.require(d.matches && d.elements_checked == 5760, "double cosets " + d.witness);
  const OrbitalGroup& og = *cs.group;
  o.require(is_fixed_point_free_involution(relation_matrix(cs, og.double_coset_of(og.z()))), "A_z");
  const OrbitalSpectrum os = orbital_spectrum(og);
  for (const OrbitalRow& r : os.rows) o.require(mod4(r.e) == 0, "residue of " + og.G().char_name(r.chi));
  const OrbitalGraph gm = build_gamma(cs);
  const WalkSystem ws = WalkSystem::from_graph(gm.graph);
  std::vector<double> exact;
  for (const OrbitalRow& r : os.rows) exact.insert(exact.end(), r.degree, static_cast<double>(r.theta));
  std::sort(exact.begin(), exact.end());
  double dev = exact.size() == ws.n() ? 0.0 : 1.0;
  for (std::size_t i = 0; i < exact.size() && i < ws.n(); ++i)
    dev = std::max(dev, std::abs(exact[i] - ws.eigenvalues()(static_cast<Eigen::Index>(i))));
  o.require(dev <= 1e-8, "numeric spectrum");
  const PstCertificate c = certify_orbital(og, os);
  o.require(c.valid, "certificate");
  o.require(std::abs(ws.amplitude(gm.z_vertex, gm.identity_vertex, c.tau)) >= 1 - kFidelityTolerance, "fidelity zH <- H");
  bool display_discrepancy = false;
  for (const LinearDisplayCheck& l : linear_display_checks(og, os)) display_discrepancy |= !l.agrees();
  o.require(display_discrepancy, "linear display discrepancy detected");
  return o;
}

Outcome orbital7() {
  Outcome o;
  const OrbitalGroup og(7);
  OrbitalSpectrum os;
  try {
    os = orbital_spectrum(og);
  } catch (const NonIntegralValue& e) {
    o.require(false, std::string("integrality: ") + e.what());
    return o;
  }
  std::uint64_t total = 0;
  for (const OrbitalRow& r : os.rows) {
    o.require(mod4(r.e) == 0, "residue of " + og.G().char_name(r.chi));
    total += r.degree;
  }
  o.require(total == og.coset_count(), "degrees sum to the coset count");
  o.require(certify_orbital(og, os).valid, "certificate");
  return o;
}

Outcome scheme_core() {
  Outcome o;
  const LieGroup G = LieGroup::make(Family::GL, 3);
  const GroupData gd = group_data(G);
  const SchemeRelationSet rs = conjugacy_scheme(gd);
  o.require(verify_axioms(rs).ok, "axioms");
  const IdempotentReport r = check_idempotents(gd, rs, idempotents_from_characters(gd));
  o.require(r.eigen_relation_error < 1e-9 && r.idempotent_error < 1e-9 && r.orthogonality_error < 1e-9 &&
                r.sum_error < 1e-9,
            "idempotent relations");
  std::vector<long> ranks = r.ranks, squares;
  for (const IrrLabel& chi : G.characters()) squares.push_back(static_cast<long>(G.degree(chi) * G.degree(chi)));
  std::sort(ranks.begin(), ranks.end());
  std::sort(squares.begin(), squares.end());
  o.require(ranks == squares, "ranks are chi(1)^2");

  auto check = [&](const std::string& name, const Graph& g, const std::vector<std::uint32_t>& partner, std::uint32_t a,
                   bool expect_pst) {
    const Agreement ag = pst_vs_simulation(g, partner, a);
    o.require(ag.predicted == ag.simulated, "pst_test disagrees with simulation on " + name);
    o.require(ag.predicted == expect_pst, "unexpected verdict on " + name);
  };
  check("K2", complete_graph(2), {1, 0}, 0, true);
  check("C4", cycle_graph(4), {2, 3, 0, 1}, 0, true);
  check("C6", cycle_graph(6), {3, 4, 5, 0, 1, 2}, 0, false);
  const auto partner3 = involution_partner(G);
  check("complement of 24 K2", explicit_graph(G, build_connection_set(G)), partner3, 0, true);
  check("GL(2,3) alternative", explicit_graph(G, build_connection_set(G, Variant::TAlternative)), partner3, 0, true);
  for (Family f : {Family::SL, Family::GU}) {
    for (std::uint32_t q : {3u, 5u}) {
      const LieGroup H = LieGroup::make(f, q);
      if (H.order() > kDefaultSimulationBound) continue;
      check(to_string(f) + std::to_string(q), explicit_graph(H, build_connection_set(H)), involution_partner(H), 0, true);
    }
  }
  const CosetSpace cs = build_coset_space(3);
  const OrbitalGraph gm = build_gamma(cs);
  std::vector<std::uint32_t> zpartner(cs.size());
  const FiniteField& F = cs.group->field();
  for (std::uint32_t x = 0; x < cs.size(); ++x)
    zpartner[x] = cs.coset_of(mat_mul(F, cs.representatives[x], cs.group->z()));
  check("orbital graph at q = 3", gm.graph, zpartner, gm.identity_vertex, true);
  return o;
}

Outcome tables() {
  Outcome o;
  for (Family f : {Family::GL, Family::GU})
    for (std::uint32_t q : {3u, 5u, 7u}) o.require(orthogonal(LieGroup::make(f, q)), to_string(f) + std::to_string(q));
  for (std::uint32_t q : {3u, 5u}) o.require(orthogonal(LieGroup::make(Family::SL, q)), "sl" + std::to_string(q));
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit;  // seconds; 0 when unbounded
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "GL(2,3): S = G minus {I,t}, spectrum, certificate, fidelity on 48 pairs", 5, gl3},
      {2, "GL(2,3) alternative set: connected, mod-4 conditions, fidelity", 5, gl3_alternative},
      {3, "GL(2,5): |S| = 286, residues, linear closed forms, sampled fidelity", 60, gl5},
      {4, "SL(2,3), SL(2,5): degree, order-based set, residues, fidelity", 30, sl35},
      {5, "GU(2,3), GU(2,5): orders, degree 62, congruences, linear discrepancy, fidelity", 60, gu35},
      {6, "orbital q = 3: cosets, double cosets, A_z, spectrum, fidelity, display discrepancy", 120, orbital3},
      {7, "orbital q = 7: integral eigenvalues = 0 mod 4, certificate", 60, orbital7},
      {8, "scheme core: axioms, idempotents, pst_test against simulation", 0, scheme_core},
      {9, "character tables: orthogonality and degree sums", 0, tables},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs >= c.limit) o.require(false, "runtime over " + std::to_string(c.limit) + " s");
    const bool pass = o.failures.empty();
    failed += !pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << std::fixed << std::setprecision(2)
         << secs << " s)";
    for (const std::string& f : o.failures) line << "\n       " << f;
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
