#pragma once

// Normal Cayley graphs with perfect state transfer on GL(2,q), GU(2,q) and
// SL(2,q): connection sets, exact spectra and certificates.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pstlie/graph.hpp"
#include "pstlie/group.hpp"
#include "pstlie/scheme.hpp"

namespace pstlie {

enum class Variant { Standard, TAlternative };
std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct ConnectionSet {
  Family family = Family::GL;
  std::uint32_t q = 0;
  Variant variant = Variant::Standard;
  std::vector<ClassLabel> classes;
  std::uint64_t size = 0;  // graph degree
};

/// GL: c3(1,-1), every c2(x), and c4(z) with z^{q+1} ∈ {1} ∪ N.
/// GU: C3(1,-1), every C2(x), and C4(z) with z^{q-1} ∈ {1} ∪ R.
/// SL: the central involution and the four unipotent classes d2(±1, ·).
/// TAlternative (GL, q = 3 only): non-central elements of orders 2, 3, 4, 6.
ConnectionSet build_connection_set(const LieGroup& G, Variant variant = Variant::Standard);

bool is_inverse_closed(const LieGroup& G, const ConnectionSet& cs);
bool contains_identity(const LieGroup& G, const ConnectionSet& cs);

struct SpectrumRow {
  IrrLabel chi;
  std::uint64_t degree = 0;
  std::int64_t theta = 0;
  std::uint64_t multiplicity = 0;  // χ(1)²
  int sign = 1;                    // χ(t)/χ(1)
};

struct SpectrumTable {
  Family family = Family::GL;
  std::uint32_t q = 0;
  std::uint64_t group_order = 0;
  std::vector<SpectrumRow> rows;
};

/// θ_χ = Σ_{C ⊆ S} |C| χ(C^{-1}) / χ(1), exactly. Throws NonIntegralValue
/// naming χ if some θ_χ is not an integer.
SpectrumTable spectrum(const LieGroup& G, const ConnectionSet& cs);

std::vector<EigenRow> eigen_rows(const LieGroup& G, const SpectrumTable& st);
PstCertificate certify(const LieGroup& G, const SpectrumTable& st);

/// The Cayley graph on enumerate() order: g ~ h iff h g^{-1} ∈ S.
Graph explicit_graph(const LieGroup& G, const ConnectionSet& cs, std::uint64_t bound = kDefaultGroupBound);

/// Vertex index of x·t for every x, on enumerate() order.
std::vector<std::uint32_t> involution_partner(const LieGroup& G, std::uint64_t bound = kDefaultGroupBound);

/// Elements of S counted through element orders: for SL, elements of order
/// p or 2p together with t. Used to cross-check the class-based SL set.
std::uint64_t order_based_sl_count(const LieGroup& G, std::uint64_t bound = kDefaultGroupBound);
bool order_based_sl_matches(const LieGroup& G, const ConnectionSet& cs, std::uint64_t bound = kDefaultGroupBound);

/// A closed form for θ_χ compared with the class sum.
struct ClosedFormCheck {
  IrrLabel chi;
  std::string formula;  // which closed form was evaluated
  std::int64_t closed_form = 0;
  std::int64_t class_sum = 0;
  bool agrees() const { return closed_form == class_sum; }
};

/// Closed forms for the standard GL and GU connection sets (linear,
/// Steinberg, cuspidal and principal series rows) and the SL formula
/// θ = χ(t)/χ(1) + (q²-1) r_χ / (2χ(1)).
std::vector<ClosedFormCheck> closed_form_checks(const LieGroup& G, const SpectrumTable& st);

}  // namespace pstlie
