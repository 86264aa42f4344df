#pragma once

// Association schemes given by explicit 0-1 relation matrices, primitive
// idempotents of conjugacy class schemes, and the spectral PST test.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pstlie/graph.hpp"
#include "pstlie/group.hpp"

namespace pstlie {

inline constexpr std::uint64_t kDefaultSchemeBound = 1000;

struct SchemeRelationSet {
  std::uint32_t n = 0;
  std::vector<Eigen::MatrixXi> relations;  // relations[0] must be the identity
};

struct AxiomReport {
  bool ok = false;
  std::string witness;  // first failing axiom, empty when ok
};

/// Checks A_0 = I, Σ A_i = J, transpose closure, and A_i A_j = A_j A_i in
/// the span of the relations. Throws BoundExceeded when n > bound.
AxiomReport verify_axioms(const SchemeRelationSet& rs, std::uint64_t bound = kDefaultSchemeBound);

bool is_permutation_matrix(const Eigen::MatrixXi& m);
/// Permutation matrix P with P² = I and zero diagonal.
bool is_fixed_point_free_involution(const Eigen::MatrixXi& m);

/// Relations "distance i" of a connected graph.
SchemeRelationSet distance_scheme(const Graph& g);

// ---------------------------------------------------------------------------
// Spectral PST test

struct EigenEntry {
  std::int64_t theta = 0;
  int sign = 1;  // +1 when T E = E, -1 when T E = -E
};

struct PstVerdict {
  bool pst = false;
  std::int64_t g = 0;
  double tau = 0.0;  // π/g, 0 when g = 0
};

/// PST between the pair exchanged by the involution T iff every (θ0-θ)/g is
/// even on the + side and odd on the - side, with g = gcd(θ0-θ).
PstVerdict pst_test(const std::vector<EigenEntry>& eigensystem, std::int64_t theta0);
/// Same for floating-point eigenvalues; throws NonIntegralValue unless each
/// is within 1e-8 of an integer.
PstVerdict pst_test_numeric(const std::vector<std::pair<double, int>>& eigensystem, double theta0);

struct EigenRow {
  std::string label;
  std::int64_t theta = 0;
  std::uint64_t multiplicity = 0;
  int sign = 1;
};

struct PstCertificate {
  bool integral = true;
  bool involution_present = true;
  std::int64_t theta0 = 0;
  std::int64_t a = 0;           // θ0 mod 4
  bool condition_ii = false;    // Φ+ ≡ a, Φ- ≡ a+2 (mod 4)
  std::int64_t g = 0;
  double tau = 0.0;
  bool parity_pst = false;      // pst_test verdict
  bool connected = false;       // θ0 has multiplicity one
  bool valid = false;
  std::string transfer_rule;
  std::optional<double> fidelity_deviation;  // max |1 - fidelity| from simulation
  std::vector<std::string> failures;
};

PstCertificate certify_rows(const std::vector<EigenRow>& rows, const std::string& transfer_rule,
                            bool involution_present = true);

// ---------------------------------------------------------------------------
// Conjugacy class schemes

struct GroupData {
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint32_t>> mul;  // mul[x][y] = index of x·y
  std::vector<std::uint32_t> inv;
  std::vector<std::uint32_t> class_of;  // class 0 holds the identity
  std::uint32_t class_count = 0;
  std::vector<std::vector<std::complex<double>>> chars;  // chars[χ][class]
};

GroupData group_data(const LieGroup& G, std::uint64_t bound = kDefaultGroupBound);
GroupData cyclic_group_data(std::uint32_t n);

/// Relation i: (g, h) with h g^{-1} in class i.
SchemeRelationSet conjugacy_scheme(const GroupData& gd);

struct IdempotentBasis {
  std::vector<Eigen::MatrixXcd> E;  // one per irreducible character
};

/// E_ψ(g, h) = ψ(h g^{-1}) ψ(1) / |G|.
IdempotentBasis idempotents_from_characters(const GroupData& gd, std::uint64_t bound = kDefaultSchemeBound);

struct IdempotentReport {
  double idempotent_error = 0;  // max ‖E² - E‖
  double orthogonality_error = 0;
  double sum_error = 0;        // ‖Σ E - I‖
  double eigen_relation_error = 0;  // max ‖A_i E_ψ - λ E_ψ‖
  std::vector<long> ranks;     // rounded traces
};

IdempotentReport check_idempotents(const GroupData& gd, const SchemeRelationSet& rs, const IdempotentBasis& basis);

}  // namespace pstlie
