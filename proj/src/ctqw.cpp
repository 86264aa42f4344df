#include "pstlie/ctqw.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "pstlie/errors.hpp"

namespace pstlie {

WalkSystem::WalkSystem(const Eigen::MatrixXd& adjacency) : n_(static_cast<std::uint32_t>(adjacency.rows())), A_(adjacency) {
  if (adjacency.rows() != adjacency.cols()) throw std::invalid_argument("WalkSystem: adjacency is not square");
  if (n_ > 0 && (adjacency - adjacency.transpose()).cwiseAbs().maxCoeff() > 0)
    throw std::invalid_argument("WalkSystem: adjacency is not symmetric");
  if (n_ == 0) {
    integral_ = true;
    return;
  }
  // The QR iteration can stall on highly degenerate integer spectra; a
  // diagonal shift leaves the eigenvectors unchanged.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n_, n_);
  double shift = 0.0;
  for (double s : {0.0, 0.5, 0.3125, 0.1875}) {
    shift = s;
    es.compute(s == 0.0 ? A_ : Eigen::MatrixXd(A_ + s * I));
    if (es.info() == Eigen::Success) break;
  }
  if (es.info() != Eigen::Success) throw std::runtime_error("WalkSystem: eigensolver failed");
  lambda_ = es.eigenvalues().array() - shift;
  V_ = es.eigenvectors();
  integral_ = true;
  for (Eigen::Index i = 0; i < lambda_.size(); ++i) {
    const double r = std::round(lambda_(i));
    if (std::abs(lambda_(i) - r) >= kIntegerShadowTolerance) integral_ = false;
    shadow_.push_back(static_cast<std::int64_t>(r));
  }
  if (!integral_) shadow_.clear();
}

WalkSystem WalkSystem::from_graph(const Graph& g, double scale, std::uint64_t bound) {
  if (g.n > bound) throw BoundExceeded("simulation: " + std::to_string(g.n) + " vertices exceeds bound");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(g.n, g.n);
  for (std::uint32_t u = 0; u < g.n; ++u)
    for (std::uint32_t v : g.adj[u]) A(u, v) = scale;
  return WalkSystem(A);
}

std::optional<std::int64_t> WalkSystem::gap_gcd() const {
  if (!integral_ || shadow_.empty()) return std::nullopt;
  const std::int64_t top = shadow_.back();
  std::int64_t g = 0;
  for (std::int64_t t : shadow_) g = std::gcd(g, top - t);
  return g;
}

double WalkSystem::reconstruction_error() const {
  if (n_ == 0) return 0.0;
  return (A_ - V_ * lambda_.asDiagonal() * V_.transpose()).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd WalkSystem::evolve(double t) const {
  Eigen::VectorXcd phases(n_);
  for (std::uint32_t k = 0; k < n_; ++k) {
    const double theta = integral_ ? static_cast<double>(shadow_[k]) : lambda_(k);
    phases(k) = std::polar(1.0, -t * theta);
  }
  const Eigen::MatrixXcd Vc = V_.cast<std::complex<double>>();
  return Vc * phases.asDiagonal() * Vc.transpose();
}

double WalkSystem::unitarity_error(double t) const {
  if (n_ == 0) return 0.0;
  const Eigen::MatrixXcd U = evolve(t);
  return (U * U.adjoint() - Eigen::MatrixXcd::Identity(n_, n_)).cwiseAbs().maxCoeff();
}

std::complex<double> WalkSystem::amplitude(std::uint32_t b, std::uint32_t a, double t) const {
  if (a >= n_ || b >= n_) throw std::out_of_range("amplitude: vertex out of range");
  std::complex<double> s = 0.0;
  for (std::uint32_t k = 0; k < n_; ++k) {
    const double theta = integral_ ? static_cast<double>(shadow_[k]) : lambda_(k);
    s += V_(b, k) * V_(a, k) * std::polar(1.0, -t * theta);
  }
  return s;
}

std::vector<FidelityReport> pst_scan(const WalkSystem& ws, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                                     double t) {
  std::vector<FidelityReport> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    const std::complex<double> u = ws.amplitude(b, a, t);
    out.push_back({a, b, t, std::abs(u), u});
  }
  return out;
}

std::vector<FidelityReport> pst_scan(const WalkSystem& ws, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  const auto g = ws.gap_gcd();
  if (!g) throw NonIntegralValue("pst_scan: spectrum is not integral; an explicit time is required");
  if (*g == 0) throw std::invalid_argument("pst_scan: spectrum has a single eigenvalue");
  const double tau = std::numbers::pi / static_cast<double>(*g);
  std::vector<FidelityReport> out = pst_scan(ws, pairs, tau);
  const std::vector<FidelityReport> late = pst_scan(ws, pairs, 3 * tau);
  out.insert(out.end(), late.begin(), late.end());
  return out;
}

WalkValidation validate_transfer(const WalkSystem& ws, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                                 double tau) {
  WalkValidation v;
  v.tau = tau;
  for (double t : {tau, 3 * tau})
    for (const FidelityReport& r : pst_scan(ws, pairs, t)) v.max_deviation = std::max(v.max_deviation, std::abs(1.0 - r.fidelity));
  for (const FidelityReport& r : pst_scan(ws, pairs, tau / 2))
    v.max_half_time_fidelity = std::max(v.max_half_time_fidelity, r.fidelity);
  for (const auto& [a, b] : pairs)
    v.max_return_deviation = std::max(v.max_return_deviation, std::abs(1.0 - std::abs(ws.amplitude(a, a, 2 * tau))));
  v.ok = !pairs.empty() && v.max_deviation <= kFidelityTolerance && v.max_half_time_fidelity < 1.0 - 1e-3 &&
         v.max_return_deviation <= kFidelityTolerance;
  return v;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> sample_pairs(const std::vector<std::uint32_t>& partner, bool full,
                                                                  std::uint32_t anchor) {
  const auto n = static_cast<std::uint32_t>(partner.size());
  std::vector<std::uint32_t> xs;
  if (full) {
    xs.resize(n);
    std::iota(xs.begin(), xs.end(), 0u);
  } else if (n > 0) {
    if (anchor < n) xs.push_back(anchor);
    const std::uint32_t k = std::min<std::uint32_t>(n, 16);
    for (std::uint32_t i = 0; i < k; ++i) xs.push_back(static_cast<std::uint32_t>((static_cast<std::uint64_t>(i) * n) / k));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t x : xs) out.emplace_back(x, partner[x]);
  return out;
}

}  // namespace pstlie
