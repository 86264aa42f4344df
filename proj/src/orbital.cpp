#include "pstlie/orbital.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pstlie/errors.hpp"

namespace pstlie {

namespace {

std::uint32_t checked_q(std::uint32_t q) {
  if (q < 3 || q % 4 != 3) throw std::invalid_argument("orbital: q = " + std::to_string(q) + " is not 3 mod 4");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t r = q;
  while (r % p == 0) r /= p;
  if (r != 1) throw std::invalid_argument("orbital: q = " + std::to_string(q) + " is not a prime power");
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

struct Point {
  std::uint32_t sigma;
  FieldElement b11, b22;
};

// g ω_α = ω_σ b with b upper triangular.
Point act(const FiniteField& F, std::uint32_t inf, const Mat2& g, std::uint32_t alpha) {
  FieldElement u, v, s, w;
  if (alpha == inf) {
    u = g.b, v = g.d, s = g.a, w = g.c;
  } else {
    const FieldElement a = F.element(alpha);
    u = F.add(g.a, F.mul(g.b, a));
    v = F.add(g.c, F.mul(g.d, a));
    s = g.b;
    w = g.d;
  }
  if (u.is_zero()) return {inf, v, s};
  const FieldElement sigma = F.div(v, u);
  return {sigma.code, u, F.sub(w, F.mul(sigma, s))};
}

class CharEval {
 public:
  CharEval(const FiniteField& F, std::int64_t j) : F_(F), chi_{F.unit_order(), mod(j, F.unit_order())} {}
  CycSum operator()(FieldElement x) const { return chi_(F_.log(x)); }

 private:
  const FiniteField& F_;
  MultChar chi_;
};

}  // namespace

OrbitalGroup::OrbitalGroup(std::uint32_t q) : q_(checked_q(q)), G_(LieGroup::make(Family::GL, q * q)) {}

std::uint64_t OrbitalGroup::order_H() const {
  const std::uint64_t q = q_;
  return q * (q - 1) * (q - 1) * (q + 1);
}

bool OrbitalGroup::in_subfield(FieldElement x) const { return x.is_zero() || field().log(x) % (q_ + 1) == 0; }

bool OrbitalGroup::in_H(const Mat2& g) const {
  return in_subfield(g.a) && in_subfield(g.b) && in_subfield(g.c) && in_subfield(g.d) &&
         !mat_det(field(), g).is_zero();
}

Mat2 OrbitalGroup::frobenius(const Mat2& g) const { return mat_entry_pow(field(), g, q_); }

DoubleCosetLabel OrbitalGroup::double_coset_of(const Mat2& g) const {
  const FiniteField& F = field();
  return G_.classify(mat_mul(F, mat_inv(F, g), frobenius(g)));
}

Mat2 OrbitalGroup::z() const { return mat_scalar(field().exp(zeta_log())); }

std::vector<std::int64_t> OrbitalGroup::rep_set() const {
  std::vector<std::int64_t> r(q_ + 1);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

Mat2 OrbitalGroup::m(std::int64_t xl, std::int64_t yl) const {
  return {field().exp(xl), field().zero(), field().zero(), field().exp(yl)};
}

std::vector<Mat2> OrbitalGroup::enumerate_H(std::uint64_t bound) const {
  if (order_H() > bound) throw BoundExceeded("enumerate_H: |H| = " + std::to_string(order_H()) + " exceeds bound");
  std::vector<FieldElement> sub;
  for (std::uint32_t c = 0; c < field().order(); ++c)
    if (in_subfield(field().element(c))) sub.push_back(field().element(c));
  std::vector<Mat2> out;
  out.reserve(order_H());
  for (auto a : sub)
    for (auto b : sub)
      for (auto c : sub)
        for (auto d : sub) {
          const Mat2 g{a, b, c, d};
          if (!mat_det(field(), g).is_zero()) out.push_back(g);
        }
  return out;
}

std::uint32_t CosetSpace::coset_of(const Mat2& g) const {
  if (!explicit_mode) throw std::logic_error("coset_of: coset space is not explicit");
  const auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) throw std::invalid_argument("coset_of: matrix is not in G");
  return coset_of_element[static_cast<std::size_t>(it - elements.begin())];
}

CosetSpace build_coset_space(std::uint32_t q, std::uint64_t bound) {
  CosetSpace cs;
  cs.group = std::make_shared<const OrbitalGroup>(q);
  const OrbitalGroup& og = *cs.group;
  if (og.order_G() > bound) return cs;
  cs.explicit_mode = true;
  const FiniteField& F = og.field();
  cs.elements = og.G().enumerate(bound);
  const std::vector<Mat2> H = og.enumerate_H(bound);
  constexpr std::uint32_t kUnset = ~0u;
  cs.coset_of_element.assign(cs.elements.size(), kUnset);
  auto index = [&](const Mat2& g) {
    return static_cast<std::size_t>(std::lower_bound(cs.elements.begin(), cs.elements.end(), g) - cs.elements.begin());
  };
  for (std::size_t i = 0; i < cs.elements.size(); ++i) {
    if (cs.coset_of_element[i] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(cs.representatives.size());
    cs.representatives.push_back(cs.elements[i]);
    for (const Mat2& h : H) cs.coset_of_element[index(mat_mul(F, cs.elements[i], h))] = c;
  }
  if (cs.representatives.size() != og.coset_count())
    throw std::logic_error("build_coset_space: coset count mismatch");
  return cs;
}

DoubleCosetCheck check_double_cosets(const CosetSpace& cs) {
  DoubleCosetCheck r;
  if (!cs.explicit_mode) throw std::logic_error("check_double_cosets: coset space is not explicit");
  const OrbitalGroup& og = *cs.group;
  const FiniteField& F = og.field();
  const std::uint32_t n = cs.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Mat2& h : og.enumerate_H()) {
    for (std::uint32_t c = 0; c < n; ++c) {
      const std::uint32_t a = find(c), b = find(cs.coset_of(mat_mul(F, h, cs.representatives[c])));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::uint32_t, DoubleCosetLabel> by_orbit;
  std::map<DoubleCosetLabel, std::uint32_t> by_label;
  r.matches = true;
  for (std::size_t i = 0; i < cs.elements.size(); ++i) {
    const std::uint32_t orbit = find(cs.coset_of_element[i]);
    const DoubleCosetLabel label = og.double_coset_of(cs.elements[i]);
    ++r.elements_checked;
    const auto [it1, new1] = by_orbit.emplace(orbit, label);
    const auto [it2, new2] = by_label.emplace(label, orbit);
    if ((!new1 && it1->second != label) || (!new2 && it2->second != orbit)) {
      if (r.matches)
        r.witness = "element " + mat_to_string(F, cs.elements[i]) + " has invariant " +
                    og.G().class_name(label) + " inconsistent with its H-orbit";
      r.matches = false;
    }
  }
  r.literal_count = static_cast<std::uint32_t>(by_orbit.size());
  r.invariant_count = static_cast<std::uint32_t>(by_label.size());
  if (r.literal_count != r.invariant_count) r.matches = false;
  return r;
}

namespace {

// Label index of r^{-1}s for every pair of cosets.
struct LabelGrid {
  std::vector<DoubleCosetLabel> labels;
  std::vector<std::uint32_t> cell;  // n*n, row r, column s
};

LabelGrid label_grid(const CosetSpace& cs) {
  const OrbitalGroup& og = *cs.group;
  const FiniteField& F = og.field();
  const std::uint32_t n = cs.size();
  LabelGrid g;
  g.cell.resize(static_cast<std::size_t>(n) * n);
  std::map<DoubleCosetLabel, std::uint32_t> ids;
  ids.emplace(og.double_coset_of(mat_identity(F)), 0u);
  g.labels.push_back(ids.begin()->first);
  for (std::uint32_t r = 0; r < n; ++r) {
    const Mat2 ri = mat_inv(F, cs.representatives[r]);
    for (std::uint32_t s = 0; s < n; ++s) {
      const DoubleCosetLabel d = og.double_coset_of(mat_mul(F, ri, cs.representatives[s]));
      auto [it, fresh] = ids.emplace(d, static_cast<std::uint32_t>(g.labels.size()));
      if (fresh) g.labels.push_back(d);
      g.cell[static_cast<std::size_t>(r) * n + s] = it->second;
    }
  }
  return g;
}

std::set<DoubleCosetLabel> gamma_connection(const OrbitalGroup& og, bool include_z) {
  std::set<DoubleCosetLabel> conn;
  if (include_z) conn.insert(og.double_coset_of(og.z()));
  const auto reps = og.rep_set();
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) conn.insert(og.double_coset_of(og.m(reps[i], reps[j])));
  return conn;
}

}  // namespace

OrbitalGraph build_gamma(const CosetSpace& cs, bool include_z) {
  if (!cs.explicit_mode) throw std::logic_error("build_gamma: coset space is not explicit");
  const OrbitalGroup& og = *cs.group;
  OrbitalGraph out;
  out.includes_z = include_z;
  const std::set<DoubleCosetLabel> conn = gamma_connection(og, include_z);
  out.connection.assign(conn.begin(), conn.end());
  const std::uint32_t n = cs.size();
  const LabelGrid grid = label_grid(cs);
  std::vector<char> allowed(grid.labels.size(), 0);
  for (std::size_t k = 0; k < grid.labels.size(); ++k) allowed[k] = conn.count(grid.labels[k]) ? 1 : 0;
  out.graph = Graph(n);
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t s = r + 1; s < n; ++s)
      if (allowed[grid.cell[static_cast<std::size_t>(r) * n + s]]) out.graph.add_edge(r, s);
  out.graph.normalize();
  out.identity_vertex = cs.coset_of(mat_identity(og.field()));
  out.z_vertex = cs.coset_of(og.z());
  return out;
}

OrbitalRelations orbital_relations(const CosetSpace& cs) {
  if (!cs.explicit_mode) throw std::logic_error("orbital_relations: coset space is not explicit");
  const OrbitalGroup& og = *cs.group;
  const std::uint32_t n = cs.size();
  const LabelGrid grid = label_grid(cs);
  OrbitalRelations out;
  out.labels = grid.labels;
  out.scheme.n = n;
  out.scheme.relations.assign(grid.labels.size(), Eigen::MatrixXi::Zero(n, n));
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t s = 0; s < n; ++s) out.scheme.relations[grid.cell[static_cast<std::size_t>(r) * n + s]](r, s) = 1;
  out.representatives.assign(grid.labels.size(), mat_identity(og.field()));
  std::vector<char> seen(grid.labels.size(), 0);
  for (std::uint32_t s = 0; s < n; ++s) {
    const DoubleCosetLabel d = og.double_coset_of(cs.representatives[s]);
    const auto k = static_cast<std::size_t>(std::find(grid.labels.begin(), grid.labels.end(), d) - grid.labels.begin());
    if (k < seen.size() && !seen[k]) {
      seen[k] = 1;
      out.representatives[k] = cs.representatives[s];
    }
  }
  return out;
}

Eigen::MatrixXi relation_matrix(const CosetSpace& cs, const DoubleCosetLabel& d) {
  if (!cs.explicit_mode) throw std::logic_error("relation_matrix: coset space is not explicit");
  const OrbitalGroup& og = *cs.group;
  const FiniteField& F = og.field();
  const std::uint32_t n = cs.size();
  Eigen::MatrixXi A = Eigen::MatrixXi::Zero(n, n);
  for (std::uint32_t r = 0; r < n; ++r) {
    const Mat2 ri = mat_inv(F, cs.representatives[r]);
    for (std::uint32_t s = 0; s < n; ++s)
      if (og.double_coset_of(mat_mul(F, ri, cs.representatives[s])) == d) A(r, s) = 1;
  }
  return A;
}

bool normalizes_H(const OrbitalGroup& og, const Mat2& d) {
  const FiniteField& F = og.field();
  const Mat2 di = mat_inv(F, d);
  for (const Mat2& h : og.enumerate_H())
    if (!og.in_H(mat_mul(F, mat_mul(F, d, h), di))) return false;
  return true;
}

std::uint32_t infinity_point(const OrbitalGroup& og) { return og.field().order(); }

std::vector<std::vector<CycSum>> m_theta(const OrbitalGroup& og, std::int64_t j1, std::int64_t j2) {
  const FiniteField& F = og.field();
  const std::int64_t q = og.q();
  const std::int64_t N = q * q - 1;
  const std::uint32_t inf = infinity_point(og);
  const CharEval th2(F, j2);
  const bool b_kernel = mod(j1, q - 1) == 0 && mod(j2, q - 1) == 0;
  const bool c_kernel = mod(j1 + q * j2, N) == 0;
  const CycSum tb = CycSum::integer(b_kernel ? q * (q - 1) * (q - 1) : 0);
  const std::int64_t tc = c_kernel ? N : 0;
  auto in_p1 = [&](std::uint32_t a) { return a == inf || og.in_subfield(F.element(a)); };

  std::vector<std::vector<CycSum>> M(inf + 1, std::vector<CycSum>(inf + 1));
  for (std::uint32_t beta = 0; beta <= inf; ++beta)
    for (std::uint32_t alpha = 0; alpha <= inf; ++alpha) {
      if (in_p1(alpha) && in_p1(beta)) {
        M[beta][alpha] = tb;
      } else if (!in_p1(alpha) && !in_p1(beta)) {
        // β = c + dα with c, d ∈ F_q, d ≠ 0.
        const FieldElement a = F.element(alpha), b = F.element(beta);
        FieldElement d = F.zero();
        for (std::uint32_t code = 1; code < F.order(); ++code) {
          const FieldElement cand = F.element(code);
          if (og.in_subfield(cand) && og.in_subfield(F.sub(b, F.mul(cand, a)))) {
            d = cand;
            break;
          }
        }
        M[beta][alpha] = th2(d) * tc;
      }
    }
  return M;
}

std::vector<std::vector<CycSum>> m_theta_literal(const OrbitalGroup& og, std::int64_t j1, std::int64_t j2) {
  const FiniteField& F = og.field();
  const std::uint32_t inf = infinity_point(og);
  const CharEval th1(F, j1), th2(F, j2);
  std::vector<std::vector<CycSum>> M(inf + 1, std::vector<CycSum>(inf + 1));
  for (const Mat2& h : og.enumerate_H())
    for (std::uint32_t alpha = 0; alpha <= inf; ++alpha) {
      const Point p = act(F, inf, h, alpha);
      M[p.sigma][alpha] += th1(p.b11) * th2(p.b22);
    }
  return M;
}

CycSum induced_character(const OrbitalGroup& og, std::int64_t j1, std::int64_t j2, const Mat2& g) {
  const FiniteField& F = og.field();
  const std::uint32_t inf = infinity_point(og);
  const CharEval th1(F, j1), th2(F, j2);
  CycSum total;
  for (std::uint32_t alpha = 0; alpha <= inf; ++alpha) {
    const Point p = act(F, inf, g, alpha);
    if (p.sigma == alpha) total += th1(p.b11) * th2(p.b22);
  }
  return total;
}

std::vector<IrrLabel> double_quotient_characters(const OrbitalGroup& og) {
  const std::int64_t q = og.q();
  const std::int64_t N = q * q - 1;
  std::set<IrrLabel> out;
  for (std::int64_t j = 0; j < N; j += q - 1) {
    out.insert({Family::GL, IrrKind::Linear, j, 0});
    out.insert({Family::GL, IrrKind::Steinberg, j, 0});
    for (std::int64_t k = j + q - 1; k < N; k += q - 1) out.insert({Family::GL, IrrKind::Principal, j, k});
  }
  for (std::int64_t j2 = 0; j2 < N; ++j2) {
    if (j2 % (q - 1) == 0) continue;
    const std::int64_t j1 = mod(-q * j2, N);
    out.insert({Family::GL, IrrKind::Principal, std::min(j1, j2), std::max(j1, j2)});
  }
  return {out.begin(), out.end()};
}

namespace {

bool is_double_quotient_char(const OrbitalGroup& og, const IrrLabel& chi) {
  const auto all = double_quotient_characters(og);
  return std::find(all.begin(), all.end(), chi) != all.end();
}

CycSum central_character(const OrbitalGroup& og, const IrrLabel& chi, FieldElement s) {
  const FiniteField& F = og.field();
  switch (chi.kind) {
    case IrrKind::Linear:
    case IrrKind::Steinberg: return CharEval(F, chi.p1)(F.mul(s, s));
    case IrrKind::Principal: return CharEval(F, chi.p1)(s) * CharEval(F, chi.p2)(s);
    default: throw std::invalid_argument("central_character: character is not in Irr(G//H)");
  }
}

CycSum principal_diagonal_sum(const OrbitalGroup& og, std::int64_t j1, std::int64_t j2, FieldElement x,
                              FieldElement y) {
  const FiniteField& F = og.field();
  const std::int64_t q = og.q();
  const std::int64_t N = q * q - 1;
  const CharEval th1(F, j1), th2(F, j2);
  const bool b_kernel = mod(j1, q - 1) == 0 && mod(j2, q - 1) == 0;
  const bool c_kernel = mod(j1 + q * j2, N) == 0;
  const bool f_kernel = mod(j2, q - 1) == 0;
  CycSum v = (th1(x) * th2(y) + th1(y) * th2(x)) * (b_kernel ? q * (q - 1) * (q - 1) : 0);
  v += th1(x) * th2(y) * ((q - 1) * (c_kernel ? N : 0) * (f_kernel ? q - 1 : 0));
  return v;
}

}  // namespace

CycSum coset_char_sum(const OrbitalGroup& og, const IrrLabel& chi, const Mat2& g) {
  const FiniteField& F = og.field();
  const std::int64_t hord = static_cast<std::int64_t>(og.order_H());
  if (!g.b.is_zero() || !g.c.is_zero() || g.a.is_zero() || g.d.is_zero())
    throw std::invalid_argument("coset_char_sum: g must be diagonal");
  if (g.a == g.d) {
    if (!is_double_quotient_char(og, chi))
      throw std::invalid_argument("coset_char_sum: central case needs a character of Irr(G//H)");
    return central_character(og, chi, g.a) * hord;
  }
  if (og.in_subfield(F.div(g.d, g.a))) throw std::invalid_argument("coset_char_sum: x^{-1}y lies in F_q");
  const std::int64_t q = og.q();
  auto linear = [&](std::int64_t j) {
    if (mod(j, q - 1) != 0) throw std::invalid_argument("coset_char_sum: λ is not trivial on F_q^×");
    return CharEval(F, j)(F.mul(g.a, g.d)) * hord;
  };
  switch (chi.kind) {
    case IrrKind::Linear: return linear(chi.p1);
    case IrrKind::Steinberg: return principal_diagonal_sum(og, chi.p1, chi.p1, g.a, g.d) - linear(chi.p1);
    case IrrKind::Principal: return principal_diagonal_sum(og, chi.p1, chi.p2, g.a, g.d);
    default: throw std::invalid_argument("coset_char_sum: no closed form for " + LieGroup::kind_name(chi));
  }
}

CycSum coset_char_sum_literal(const OrbitalGroup& og, const IrrLabel& chi, const Mat2& g) {
  const FiniteField& F = og.field();
  CycSum total;
  for (const Mat2& h : og.enumerate_H()) {
    const Mat2 gh = mat_mul(F, g, h);
    switch (chi.kind) {
      case IrrKind::Linear: total += CharEval(F, chi.p1)(mat_det(F, gh)); break;
      case IrrKind::Steinberg:
        total += induced_character(og, chi.p1, chi.p1, gh) - CharEval(F, chi.p1)(mat_det(F, gh));
        break;
      case IrrKind::Principal: total += induced_character(og, chi.p1, chi.p2, gh); break;
      default: total += og.G().char_value(chi, og.G().classify(gh)); break;
    }
  }
  return total;
}

int restriction_multiplicity(const OrbitalGroup& og, std::int64_t j1, std::int64_t j2) {
  const std::int64_t q = og.q();
  const std::int64_t N = q * q - 1;
  const bool same = mod(j1 - j2, N) == 0;
  const bool trivial_on_fq = mod(j1, q - 1) == 0 && mod(j2, q - 1) == 0;
  if (same) return trivial_on_fq ? 2 : 0;
  if (trivial_on_fq) return 1;
  if (mod(j1 + q * j2, N) == 0) return 1;
  return 0;
}

std::int64_t restriction_multiplicity_literal(const OrbitalGroup& og, std::int64_t j1, std::int64_t j2) {
  CycSum total;
  for (const Mat2& h : og.enumerate_H()) total += induced_character(og, j1, j2, h);
  const std::int64_t v = integer_part(total);
  const auto hord = static_cast<std::int64_t>(og.order_H());
  if (v % hord != 0) throw NonIntegralValue("restriction multiplicity is not an integer");
  return v / hord;
}

CycSum restriction_sum(const OrbitalGroup& og, const IrrLabel& chi) {
  CycSum total;
  for (const Mat2& h : og.enumerate_H()) total += og.G().char_value(chi, og.G().classify(h));
  return total;
}

std::int64_t orbital_eigenvalue(const OrbitalGroup& og, const IrrLabel& chi) {
  const std::int64_t q = og.q();
  const auto reps = og.rep_set();
  CycSum total;
  for (std::int64_t x : reps)
    for (std::int64_t y : reps)
      if (x != y) total += coset_char_sum(og, chi, og.m(x, y));
  const std::string name = og.G().char_name(chi);
  std::int64_t v = 0;
  try {
    v = integer_part(total);
  } catch (const NonIntegralValue&) {
    throw NonIntegralValue("E for " + name + " is not an integer");
  }
  const std::int64_t den = 2 * (q - 1) * (q - 1);
  if (v % den != 0) throw NonIntegralValue("E for " + name + " is not an integer");
  return v / den;
}

OrbitalSpectrum orbital_spectrum(const OrbitalGroup& og, bool include_z) {
  OrbitalSpectrum os;
  os.q = og.q();
  os.includes_z = include_z;
  const FieldElement zeta = og.field().exp(og.zeta_log());
  for (const IrrLabel& chi : double_quotient_characters(og)) {
    OrbitalRow r;
    r.chi = chi;
    r.degree = og.G().degree(chi);
    r.e = orbital_eigenvalue(og, chi);
    r.sign = static_cast<int>(integer_part(central_character(og, chi, zeta)));
    r.theta = r.e + (include_z ? r.sign : 0);
    os.rows.push_back(r);
  }
  return os;
}

std::vector<EigenRow> eigen_rows(const OrbitalGroup& og, const OrbitalSpectrum& os) {
  std::vector<EigenRow> out;
  for (const OrbitalRow& r : os.rows) out.push_back({og.G().char_name(r.chi), r.theta, r.degree, r.sign});
  return out;
}

PstCertificate certify_orbital(const OrbitalGroup& og, const OrbitalSpectrum& os) {
  return certify_rows(eigen_rows(og, os), "xH <-> xzH for every coset xH, z = zeta*I", os.includes_z);
}

std::vector<LinearDisplayCheck> linear_display_checks(const OrbitalGroup& og, const OrbitalSpectrum& os) {
  const std::int64_t q = og.q();
  const std::int64_t N = q * q - 1;
  std::vector<LinearDisplayCheck> out;
  for (const OrbitalRow& r : os.rows) {
    if (r.chi.kind != IrrKind::Linear) continue;
    const std::int64_t j = mod(r.chi.p1, N);
    const std::int64_t line = j == 0 ? N : 0;               // λ(F_{q²}^×)
    const std::int64_t full = line * line;                  // [λ,λ](F^× × F^×)
    const std::int64_t squares = (2 * j) % N == 0 ? N / 2 : 0;  // λ(S)
    LinearDisplayCheck c;
    c.chi = r.chi;
    c.display_value = q * (q + 1) / 2 * (full - 2 * squares);
    c.rescaled_value = q * (q + 1) / 2 * (full / ((q - 1) * (q - 1)) - 2 * squares / (q - 1));
    c.direct_value = r.e;
    out.push_back(c);
  }
  return out;
}

}  // namespace pstlie
