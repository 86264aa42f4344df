#pragma once

// Continuous-time quantum walks U(t) = exp(-itA) through the spectral
// decomposition of a real symmetric adjacency matrix.

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pstlie/graph.hpp"

namespace pstlie {

inline constexpr std::uint64_t kDefaultSimulationBound = 150;
inline constexpr double kIntegerShadowTolerance = 1e-8;
inline constexpr double kFidelityTolerance = 1e-9;

class WalkSystem {
 public:
  explicit WalkSystem(const Eigen::MatrixXd& adjacency);
  /// scale multiplies every edge weight (used to make P3 integral).
  static WalkSystem from_graph(const Graph& g, double scale = 1.0,
                               std::uint64_t bound = kDefaultSimulationBound);

  std::uint32_t n() const { return n_; }
  const Eigen::MatrixXd& adjacency() const { return A_; }
  /// Ascending.
  const Eigen::VectorXd& eigenvalues() const { return lambda_; }
  const Eigen::MatrixXd& eigenvectors() const { return V_; }

  /// True when every eigenvalue is within 1e-8 of an integer.
  bool integral() const { return integral_; }
  /// Rounded eigenvalues, ascending; empty unless integral().
  const std::vector<std::int64_t>& integer_shadow() const { return shadow_; }
  /// gcd of θ_max - θ over the spectrum; empty unless integral().
  std::optional<std::int64_t> gap_gcd() const;

  double reconstruction_error() const;
  double unitarity_error(double t) const;

  Eigen::MatrixXcd evolve(double t) const;
  /// U(t)[b, a].
  std::complex<double> amplitude(std::uint32_t b, std::uint32_t a, double t) const;

 private:
  std::uint32_t n_;
  Eigen::MatrixXd A_;
  Eigen::VectorXd lambda_;
  Eigen::MatrixXd V_;
  bool integral_ = false;
  std::vector<std::int64_t> shadow_;
};

struct FidelityReport {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  double time = 0.0;
  double fidelity = 0.0;
  std::complex<double> phase;  // U(time)[b, a]
};

/// Fidelities of every pair at the explicit time t.
std::vector<FidelityReport> pst_scan(const WalkSystem& ws, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                                     double t);
/// Fidelities at τ = π/g and at 3τ, g from the integer spectrum. Throws
/// NonIntegralValue when the spectrum is not integral.
std::vector<FidelityReport> pst_scan(const WalkSystem& ws, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

struct WalkValidation {
  double tau = 0.0;
  double max_deviation = 0.0;        // max |1 - fidelity| at τ and 3τ
  double max_half_time_fidelity = 0.0;
  double max_return_deviation = 0.0;  // max |1 - |U(2τ)[a, a]||
  bool ok = false;                   // deviation ≤ 1e-9, half-time < 1 - 1e-3, return ≤ 1e-9
};

WalkValidation validate_transfer(const WalkSystem& ws, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                                 double tau);

/// (x, partner[x]) for the anchor and min(n, 16) evenly spaced vertices, or
/// for every vertex when full is set.
std::vector<std::pair<std::uint32_t, std::uint32_t>> sample_pairs(const std::vector<std::uint32_t>& partner, bool full,
                                                                  std::uint32_t anchor = 0);

}  // namespace pstlie
