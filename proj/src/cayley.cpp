#include "pstlie/cayley.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "pstlie/errors.hpp"

namespace pstlie {

std::string to_string(Variant v) { return v == Variant::Standard ? "standard" : "t-alt"; }

Variant variant_from_string(const std::string& s) {
  if (s == "standard") return Variant::Standard;
  if (s == "t-alt" || s == "t-alternative") return Variant::TAlternative;
  throw std::invalid_argument("unknown variant: " + s);
}

ConnectionSet build_connection_set(const LieGroup& G, Variant variant) {
  ConnectionSet cs;
  cs.family = G.family();
  cs.q = G.q();
  cs.variant = variant;
  const std::int64_t q = G.q();
  const std::int64_t Q = q - 1;
  const std::int64_t N = q * q - 1;

  if (variant == Variant::TAlternative) {
    if (G.family() != Family::GL || q != 3)
      throw std::invalid_argument("build_connection_set: the alternative set exists only for GL(2,3)");
    for (const auto& c : G.classes()) {
      if (c.kind == ClassKind::Central) continue;
      const std::uint64_t o = G.element_order(G.representative(c));
      if (o == 2 || o == 3 || o == 4 || o == 6) cs.classes.push_back(c);
    }
  } else {
    for (const auto& c : G.classes()) {
      bool in = false;
      switch (G.family()) {
        case Family::GL:
          in = (c.kind == ClassKind::Split && c.p1 == 0 && c.p2 == Q / 2) || c.kind == ClassKind::Unipotent ||
               (c.kind == ClassKind::Nonsplit && (c.p1 % Q == 0 || c.p1 % 2 == 1));
          break;
        case Family::GU:
          in = (c.kind == ClassKind::Split && c.p1 == 0 && c.p2 == N / 2) || c.kind == ClassKind::Unipotent ||
               (c.kind == ClassKind::Nonsplit && (c.p1 % (q + 1) == 0 || c.p1 % 2 == 1));
          break;
        case Family::SL:
          in = c == G.central_involution_class() || c.kind == ClassKind::Unipotent;
          break;
      }
      if (in) cs.classes.push_back(c);
    }
  }
  for (const auto& c : cs.classes) cs.size += G.class_size(c);
  return cs;
}

bool is_inverse_closed(const LieGroup& G, const ConnectionSet& cs) {
  const std::set<ClassLabel> s(cs.classes.begin(), cs.classes.end());
  return std::all_of(cs.classes.begin(), cs.classes.end(),
                     [&](const ClassLabel& c) { return s.count(G.inverse_class(c)) > 0; });
}

bool contains_identity(const LieGroup& G, const ConnectionSet& cs) {
  return std::find(cs.classes.begin(), cs.classes.end(), G.identity_class()) != cs.classes.end();
}

SpectrumTable spectrum(const LieGroup& G, const ConnectionSet& cs) {
  SpectrumTable st;
  st.family = G.family();
  st.q = G.q();
  st.group_order = G.order();
  for (const auto& chi : G.characters()) {
    CycSum sum;
    for (const auto& c : cs.classes)
      sum += static_cast<std::int64_t>(G.class_size(c)) * G.char_value(chi, c).conj();
    std::int64_t total = 0;
    try {
      total = integer_part(sum);
    } catch (const NonIntegralValue& e) {
      throw NonIntegralValue("eigenvalue for " + G.char_name(chi) + ": " + e.what());
    }
    const auto deg = static_cast<std::int64_t>(G.degree(chi));
    if (total % deg != 0)
      throw NonIntegralValue("eigenvalue for " + G.char_name(chi) + " is " + std::to_string(total) + "/" +
                             std::to_string(deg));
    st.rows.push_back({chi, G.degree(chi), total / deg, G.degree(chi) * G.degree(chi), G.central_sign(chi)});
  }
  return st;
}

std::vector<EigenRow> eigen_rows(const LieGroup& G, const SpectrumTable& st) {
  std::vector<EigenRow> rows;
  for (const auto& r : st.rows) rows.push_back({G.char_name(r.chi), r.theta, r.multiplicity, r.sign});
  return rows;
}

PstCertificate certify(const LieGroup& G, const SpectrumTable& st) {
  return certify_rows(eigen_rows(G, st), "x <-> x*t for every vertex x, t = -I");
}

namespace {

struct IndexedElements {
  std::vector<Mat2> els;
  std::map<Mat2, std::uint32_t> index;
};

IndexedElements indexed(const LieGroup& G, std::uint64_t bound) {
  IndexedElements ie;
  ie.els = G.enumerate(bound);
  for (std::uint32_t i = 0; i < ie.els.size(); ++i) ie.index.emplace(ie.els[i], i);
  return ie;
}

}  // namespace

Graph explicit_graph(const LieGroup& G, const ConnectionSet& cs, std::uint64_t bound) {
  const auto ie = indexed(G, bound);
  const FiniteField& F = G.matrix_field();
  const std::set<ClassLabel> members(cs.classes.begin(), cs.classes.end());
  std::vector<Mat2> S;
  for (const auto& g : ie.els)
    if (members.count(G.classify(g))) S.push_back(g);
  Graph gr(static_cast<std::uint32_t>(ie.els.size()));
  for (std::uint32_t i = 0; i < ie.els.size(); ++i)
    for (const auto& s : S) {
      const std::uint32_t j = ie.index.at(mat_mul(F, s, ie.els[i]));
      if (i < j) gr.add_edge(i, j);
    }
  gr.normalize();
  return gr;
}

std::vector<std::uint32_t> involution_partner(const LieGroup& G, std::uint64_t bound) {
  const auto ie = indexed(G, bound);
  const Mat2 t = G.central_involution();
  std::vector<std::uint32_t> partner;
  for (const auto& x : ie.els) partner.push_back(ie.index.at(mat_mul(G.matrix_field(), x, t)));
  return partner;
}

std::uint64_t order_based_sl_count(const LieGroup& G, std::uint64_t bound) {
  if (G.family() != Family::SL) throw std::invalid_argument("order_based_sl_count: SL only");
  const std::uint64_t p = G.tower().base().characteristic();
  const Mat2 t = G.central_involution();
  std::uint64_t count = 0;
  for (const auto& g : G.enumerate(bound)) {
    const std::uint64_t o = G.element_order(g);
    if (o == p || o == 2 * p || g == t) ++count;
  }
  return count;
}

bool order_based_sl_matches(const LieGroup& G, const ConnectionSet& cs, std::uint64_t bound) {
  if (G.family() != Family::SL) throw std::invalid_argument("order_based_sl_matches: SL only");
  const std::uint64_t p = G.tower().base().characteristic();
  const Mat2 t = G.central_involution();
  const std::set<ClassLabel> members(cs.classes.begin(), cs.classes.end());
  for (const auto& g : G.enumerate(bound)) {
    const std::uint64_t o = G.element_order(g);
    const bool by_order = o == p || o == 2 * p || g == t;
    if (by_order != (members.count(G.classify(g)) > 0)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t sign_pow(std::int64_t j) { return j % 2 == 0 ? 1 : -1; }

std::optional<ClosedFormCheck> gl_closed_form(std::int64_t q, const SpectrumRow& r) {
  const std::int64_t Q = q - 1, h = Q / 2;
  ClosedFormCheck c{r.chi, "", 0, r.theta};
  switch (r.chi.kind) {
    case IrrKind::Linear:
    case IrrKind::Steinberg: {
      const std::int64_t j = r.chi.p1, lm1 = sign_pow(j);
      const bool st = r.chi.kind == IrrKind::Steinberg;
      const std::int64_t k = st ? 1 : q;  // the linear form is q times the Steinberg pattern
      if (j == 0) {
        c.formula = st ? "steinberg, trivial λ" : "linear, trivial λ";
        c.closed_form = k * (q + 1) + (st ? 0 : (q * q - 1) * (q - 1)) + k * Q * Q / 2 + k * (q + 1) * Q * Q / 4;
      } else if (j == h) {
        c.formula = st ? "steinberg, quadratic λ" : "linear, quadratic λ";
        c.closed_form = k * (q + 1) * lm1 + (st ? 0 : (q * q - 1) * (q - 1)) + k * Q * Q / 2 - k * (q + 1) * Q * Q / 4;
      } else {
        c.formula = st ? "steinberg, λ² ≠ 1" : "linear, λ² ≠ 1";
        c.closed_form = k * (q + 1) * lm1 + k * Q * Q / 2;
      }
      return c;
    }
    case IrrKind::Cuspidal: {
      const std::int64_t m = r.chi.p1;
      c.formula = "cuspidal";
      if (sign_pow(m) == -1)
        c.closed_form = 0;
      else if (m % Q != 0)
        c.closed_form = 2 * q;
      else
        c.closed_form = -(q * q - 1) + 2 * q;
      return c;
    }
    case IrrKind::Principal: {
      const std::int64_t s = sign_pow(r.chi.p1) + sign_pow(r.chi.p2);
      c.formula = "principal series";
      c.closed_form = q * s + ((r.chi.p1 + r.chi.p2) % Q == 0 ? Q * Q : 0);
      return c;
    }
    default: return std::nullopt;
  }
}

std::optional<ClosedFormCheck> gu_closed_form(std::int64_t q, const SpectrumRow& r) {
  const std::int64_t Q = q - 1;
  ClosedFormCheck c{r.chi, "", 0, r.theta};
  switch (r.chi.kind) {
    case IrrKind::Linear:
    case IrrKind::Steinberg: {
      const std::int64_t j = r.chi.p1, lm1 = sign_pow(j);
      const bool st = r.chi.kind == IrrKind::Steinberg;
      const std::int64_t k = st ? 1 : q;
      const std::int64_t base = k * Q * lm1 + k * (q + 1) * (q - 3) / 2;
      const std::int64_t unip = st ? 0 : (q * q - 1) * (q + 1);
      const std::int64_t tail = k * (q + 1) * (q - 3) * (q - 1) / 4;
      if (j == 0) {
        c.formula = st ? "steinberg, trivial λ" : "linear, trivial λ";
        c.closed_form = base + unip + tail;
      } else if (2 * j == q + 1) {
        c.formula = st ? "steinberg, quadratic λ" : "linear, quadratic λ";
        c.closed_form = base + unip - tail;
      } else {
        c.formula = st ? "steinberg, λ² ≠ 1" : "linear, λ² ≠ 1";
        c.closed_form = base;
      }
      return c;
    }
    case IrrKind::Cuspidal: {
      const std::int64_t m = r.chi.p1;
      c.formula = "cuspidal";
      if (sign_pow(m) == -1)
        c.closed_form = 0;
      else if (m % (q + 1) != 0)
        c.closed_form = -2 * q;
      else
        c.closed_form = (q * q - 1) - 2 * q;
      return c;
    }
    case IrrKind::Principal: {
      const std::int64_t s = sign_pow(r.chi.p1) + sign_pow(r.chi.p2);
      c.formula = "principal series";
      c.closed_form = -q * s - ((r.chi.p1 + r.chi.p2) % (q + 1) == 0 ? (q + 1) * (q + 1) : 0);
      return c;
    }
    default: return std::nullopt;
  }
}

}  // namespace

std::vector<ClosedFormCheck> closed_form_checks(const LieGroup& G, const SpectrumTable& st) {
  std::vector<ClosedFormCheck> out;
  const std::int64_t q = G.q();
  for (const auto& r : st.rows) {
    if (G.family() == Family::GL) {
      if (auto c = gl_closed_form(q, r)) out.push_back(*c);
    } else if (G.family() == Family::GU) {
      if (auto c = gu_closed_form(q, r)) out.push_back(*c);
    } else {
      CycSum rs;
      for (const auto& c : G.classes())
        if (c.kind == ClassKind::Unipotent) rs += G.char_value(r.chi, c);
      const std::int64_t rchi = integer_part(rs);
      const std::int64_t ct = integer_part(G.char_value(r.chi, G.central_involution_class()));
      const std::int64_t num = 2 * ct + (q * q - 1) * rchi;
      const std::int64_t den = 2 * static_cast<std::int64_t>(r.degree);
      ClosedFormCheck c{r.chi, "χ(t)/χ(1) + (q²-1)r/(2χ(1))", 0, r.theta};
      c.closed_form = num % den == 0 ? num / den : std::numeric_limits<std::int64_t>::min();
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace pstlie
