#include "pstlie/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "pstlie/errors.hpp"

namespace pstlie {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

AxiomReport verify_axioms(const SchemeRelationSet& rs, std::uint64_t bound) {
  const std::uint32_t n = rs.n;
  if (n > bound) throw BoundExceeded("verify_axioms: " + std::to_string(n) + " vertices exceeds bound");
  const auto& A = rs.relations;
  if (A.empty()) return {false, "no relations"};
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].rows() != n || A[i].cols() != n) return {false, "relation " + std::to_string(i) + " has wrong shape"};
    if ((A[i].array() != 0 && A[i].array() != 1).any())
      return {false, "relation " + std::to_string(i) + " is not a 0-1 matrix"};
  }
  if (A[0] != Eigen::MatrixXi::Identity(n, n)) return {false, "A_0 is not the identity"};
  Eigen::MatrixXi sum = Eigen::MatrixXi::Zero(n, n);
  for (const auto& m : A) sum += m;
  if (sum != Eigen::MatrixXi::Ones(n, n)) return {false, "relations do not sum to J"};
  for (std::size_t i = 0; i < A.size(); ++i) {
    const Eigen::MatrixXi t = A[i].transpose();
    if (std::none_of(A.begin(), A.end(), [&](const Eigen::MatrixXi& m) { return m == t; }))
      return {false, "transpose of relation " + std::to_string(i) + " is not a relation"};
  }
  // Owner relation of each entry, to test span membership.
  Eigen::MatrixXi owner(n, n);
  for (std::size_t k = 0; k < A.size(); ++k)
    for (std::uint32_t r = 0; r < n; ++r)
      for (std::uint32_t c = 0; c < n; ++c)
        if (A[k](r, c)) owner(r, c) = static_cast<int>(k);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i; j < A.size(); ++j) {
      const Eigen::MatrixXi p = A[i] * A[j];
      if (p != A[j] * A[i])
        return {false, "A_" + std::to_string(i) + " and A_" + std::to_string(j) + " do not commute"};
      std::vector<int> coeff(A.size(), -1);
      for (std::uint32_t r = 0; r < n; ++r)
        for (std::uint32_t c = 0; c < n; ++c) {
          int& slot = coeff[static_cast<std::size_t>(owner(r, c))];
          if (slot < 0) slot = p(r, c);
          if (slot != p(r, c))
            return {false, "A_" + std::to_string(i) + "·A_" + std::to_string(j) + " is not in the span"};
        }
    }
  return {true, ""};
}

bool is_permutation_matrix(const Eigen::MatrixXi& m) {
  if (m.rows() != m.cols()) return false;
  if ((m.array() != 0 && m.array() != 1).any()) return false;
  return (m.rowwise().sum().array() == 1).all() && (m.colwise().sum().array() == 1).all();
}

bool is_fixed_point_free_involution(const Eigen::MatrixXi& m) {
  if (!is_permutation_matrix(m)) return false;
  if (m.diagonal().any()) return false;
  return m * m == Eigen::MatrixXi::Identity(m.rows(), m.cols());
}

SchemeRelationSet distance_scheme(const Graph& g) {
  SchemeRelationSet rs;
  rs.n = g.n;
  std::vector<std::vector<std::int32_t>> dist(g.n);
  std::int32_t diameter = 0;
  for (std::uint32_t u = 0; u < g.n; ++u) {
    dist[u] = g.distances_from(u);
    for (std::int32_t d : dist[u]) {
      if (d < 0) throw std::invalid_argument("distance_scheme: graph is disconnected");
      diameter = std::max(diameter, d);
    }
  }
  for (std::int32_t k = 0; k <= diameter; ++k) {
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(g.n, g.n);
    for (std::uint32_t u = 0; u < g.n; ++u)
      for (std::uint32_t v = 0; v < g.n; ++v) m(u, v) = dist[u][v] == k ? 1 : 0;
    rs.relations.push_back(std::move(m));
  }
  return rs;
}

// ---------------------------------------------------------------------------

PstVerdict pst_test(const std::vector<EigenEntry>& eigensystem, std::int64_t theta0) {
  PstVerdict v;
  for (const auto& e : eigensystem) v.g = std::gcd(v.g, std::abs(theta0 - e.theta));
  if (v.g == 0) return v;
  v.tau = std::numbers::pi / static_cast<double>(v.g);
  v.pst = true;
  for (const auto& e : eigensystem) {
    const std::int64_t k = (theta0 - e.theta) / v.g;
    const bool even = mod_floor(k, 2) == 0;
    if (even != (e.sign > 0)) v.pst = false;
  }
  return v;
}

PstVerdict pst_test_numeric(const std::vector<std::pair<double, int>>& eigensystem, double theta0) {
  auto to_int = [](double x) {
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-8) throw NonIntegralValue("pst_test: eigenvalue is not an integer");
    return static_cast<std::int64_t>(r);
  };
  std::vector<EigenEntry> es;
  for (const auto& [theta, sign] : eigensystem) es.push_back({to_int(theta), sign});
  return pst_test(es, to_int(theta0));
}

PstCertificate certify_rows(const std::vector<EigenRow>& rows, const std::string& transfer_rule,
                            bool involution_present) {
  PstCertificate c;
  c.transfer_rule = transfer_rule;
  c.involution_present = involution_present;
  if (rows.empty()) {
    c.failures.push_back("empty spectrum");
    return c;
  }
  c.theta0 = std::max_element(rows.begin(), rows.end(), [](const EigenRow& x, const EigenRow& y) {
               return x.theta < y.theta;
             })->theta;
  c.a = mod_floor(c.theta0, 4);
  c.condition_ii = true;
  std::uint64_t top_mult = 0;
  std::vector<EigenEntry> es;
  for (const auto& r : rows) {
    const std::int64_t want = r.sign > 0 ? c.a : mod_floor(c.a + 2, 4);
    if (mod_floor(r.theta, 4) != want) {
      c.condition_ii = false;
      c.failures.push_back("row " + r.label + ": θ = " + std::to_string(r.theta) + " has the wrong residue mod 4");
    }
    if (r.theta == c.theta0) top_mult += r.multiplicity;
    es.push_back({r.theta, r.sign});
  }
  c.connected = top_mult == 1;
  if (!c.connected) c.failures.push_back("top eigenvalue has multiplicity " + std::to_string(top_mult));
  const PstVerdict v = pst_test(es, c.theta0);
  c.g = v.g;
  c.tau = v.tau;
  c.parity_pst = v.pst;
  if (!v.pst) c.failures.push_back("parity test failed");
  if (!involution_present) c.failures.push_back("no qualifying involution relation");
  c.valid = c.integral && c.involution_present && c.condition_ii && c.parity_pst && c.connected && c.g > 0;
  return c;
}

// ---------------------------------------------------------------------------

GroupData group_data(const LieGroup& G, std::uint64_t bound) {
  const auto els = G.enumerate(bound);
  const FiniteField& F = G.matrix_field();
  GroupData gd;
  gd.n = static_cast<std::uint32_t>(els.size());
  std::map<Mat2, std::uint32_t> index;
  for (std::uint32_t i = 0; i < gd.n; ++i) index.emplace(els[i], i);
  gd.mul.assign(gd.n, std::vector<std::uint32_t>(gd.n));
  gd.inv.resize(gd.n);
  for (std::uint32_t i = 0; i < gd.n; ++i) {
    for (std::uint32_t j = 0; j < gd.n; ++j) gd.mul[i][j] = index.at(mat_mul(F, els[i], els[j]));
    gd.inv[i] = index.at(mat_inv(F, els[i]));
  }
  const auto& classes = G.classes();
  std::map<ClassLabel, std::uint32_t> cindex;
  for (std::uint32_t k = 0; k < classes.size(); ++k) cindex.emplace(classes[k], k);
  gd.class_count = static_cast<std::uint32_t>(classes.size());
  gd.class_of.resize(gd.n);
  for (std::uint32_t i = 0; i < gd.n; ++i) gd.class_of[i] = cindex.at(G.classify(els[i]));
  for (const auto& chi : G.characters()) {
    std::vector<std::complex<double>> row;
    for (const auto& c : classes) row.push_back(G.full_char_value(chi, c).evaluate());
    gd.chars.push_back(std::move(row));
  }
  return gd;
}

GroupData cyclic_group_data(std::uint32_t n) {
  GroupData gd;
  gd.n = n;
  gd.class_count = n;
  gd.mul.assign(n, std::vector<std::uint32_t>(n));
  gd.inv.resize(n);
  gd.class_of.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) gd.mul[i][j] = (i + j) % n;
    gd.inv[i] = (n - i) % n;
    gd.class_of[i] = i;
  }
  for (std::uint32_t j = 0; j < n; ++j) {
    std::vector<std::complex<double>> row;
    for (std::uint32_t a = 0; a < n; ++a) row.push_back(std::polar(1.0, 2 * std::numbers::pi * j * a / n));
    gd.chars.push_back(std::move(row));
  }
  return gd;
}

SchemeRelationSet conjugacy_scheme(const GroupData& gd) {
  SchemeRelationSet rs;
  rs.n = gd.n;
  rs.relations.assign(gd.class_count, Eigen::MatrixXi::Zero(gd.n, gd.n));
  for (std::uint32_t g = 0; g < gd.n; ++g)
    for (std::uint32_t h = 0; h < gd.n; ++h) rs.relations[gd.class_of[gd.mul[h][gd.inv[g]]]](g, h) = 1;
  return rs;
}

IdempotentBasis idempotents_from_characters(const GroupData& gd, std::uint64_t bound) {
  if (gd.n > bound) throw BoundExceeded("idempotents_from_characters: group too large");
  if (gd.chars.size() != gd.class_count) throw std::invalid_argument("idempotents_from_characters: incomplete table");
  IdempotentBasis b;
  for (const auto& psi : gd.chars) {
    const double deg = psi[0].real();
    Eigen::MatrixXcd E(gd.n, gd.n);
    for (std::uint32_t g = 0; g < gd.n; ++g)
      for (std::uint32_t h = 0; h < gd.n; ++h) E(g, h) = psi[gd.class_of[gd.mul[h][gd.inv[g]]]] * deg / double(gd.n);
    b.E.push_back(std::move(E));
  }
  return b;
}

IdempotentReport check_idempotents(const GroupData& gd, const SchemeRelationSet& rs, const IdempotentBasis& basis) {
  IdempotentReport r;
  const auto n = static_cast<Eigen::Index>(gd.n);
  std::vector<std::uint64_t> size(gd.class_count, 0);
  std::vector<std::uint32_t> inverse_class(gd.class_count, 0);
  for (std::uint32_t g = 0; g < gd.n; ++g) {
    ++size[gd.class_of[g]];
    inverse_class[gd.class_of[g]] = gd.class_of[gd.inv[g]];
  }
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < basis.E.size(); ++i) {
    const auto& E = basis.E[i];
    total += E;
    r.idempotent_error = std::max(r.idempotent_error, (E * E - E).cwiseAbs().maxCoeff());
    for (std::size_t j = i + 1; j < basis.E.size(); ++j)
      r.orthogonality_error = std::max(r.orthogonality_error, (E * basis.E[j]).cwiseAbs().maxCoeff());
    r.ranks.push_back(std::lround(E.trace().real()));
    const auto& psi = gd.chars[i];
    for (std::uint32_t k = 0; k < gd.class_count; ++k) {
      const std::complex<double> lambda = double(size[k]) * psi[inverse_class[k]] / psi[0].real();
      const Eigen::MatrixXcd A = rs.relations[k].cast<std::complex<double>>();
      r.eigen_relation_error = std::max(r.eigen_relation_error, (A * E - lambda * E).cwiseAbs().maxCoeff());
    }
  }
  r.sum_error = (total - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  return r;
}

}  // namespace pstlie
