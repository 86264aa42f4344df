#include "pstlie/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "pstlie/errors.hpp"
#include "pstlie/orbital.hpp"
#include "pstlie/scheme.hpp"

namespace pstlie {

namespace {

using nlohmann::json;

std::uint32_t checked_prime_power(std::uint32_t q) {
  if (q < 3 || q % 2 == 0) throw UsageError("q must be an odd prime power, got " + std::to_string(q));
  std::uint32_t p = 3;
  while (q % p != 0) p += 2;
  std::uint32_t r = q;
  while (r % p == 0) r /= p;
  if (r != 1) throw UsageError("q must be an odd prime power, got " + std::to_string(q));
  if (q > 1000) throw UsageError("q = " + std::to_string(q) + " is outside the supported range");
  return q;
}

json field_json(const FiniteField& F) {
  return {{"order", F.order()},
          {"characteristic", F.characteristic()},
          {"modulus", F.modulus_string()},
          {"generator", F.to_string(F.generator())}};
}

json tower_json(const FieldTower& T) {
  return {{"base", field_json(T.base())},
          {"extension", field_json(T.ext())},
          {"delta", T.base().to_string(T.delta())},
          {"sqrt_delta", T.ext().to_string(T.sqrt_delta())}};
}

json certificate_json(const PstCertificate& c) {
  json j = {{"integral", c.integral},
            {"involution_present", c.involution_present},
            {"theta0", c.theta0},
            {"a", c.a},
            {"condition_ii", c.condition_ii},
            {"g", c.g},
            {"tau", c.tau},
            {"tau_over_pi", c.g > 0 ? "1/" + std::to_string(c.g) : "none"},
            {"pst_test", c.parity_pst},
            {"pst_test_form", "parity: (theta0-theta)/g even on the + side, odd on the - side"},
            {"connected", c.connected},
            {"valid", c.valid},
            {"transfer_rule", c.transfer_rule},
            {"failures", c.failures}};
  j["fidelity_deviation"] = c.fidelity_deviation ? json(*c.fidelity_deviation) : json(nullptr);
  return j;
}

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

void add_check(Report& r, std::string name, bool passed, std::string detail = "") {
  r.checks.push_back({std::move(name), passed, std::move(detail)});
}

json checks_json(const Report& r) {
  json arr = json::array();
  for (const CrossCheck& c : r.checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return arr;
}

json notices_json(const Report& r) {
  json arr = json::array();
  for (const Notice& n : r.notices) arr.push_back({{"kind", n.kind}, {"subject", n.subject}, {"detail", n.detail}});
  return arr;
}

Notice method_notice() {
  return {"method", "pst test",
          "PST is decided by the parity form: (theta0-theta)/g even for rows fixed by the involution and odd for "
          "rows it negates; the 2-adic valuation form with the sides exchanged is not used"};
}

void finish(Report& r, json& j) {
  const bool checks_ok = std::all_of(r.checks.begin(), r.checks.end(), [](const CrossCheck& c) { return c.passed; });
  if (!r.certificate_valid)
    r.exit_code = kExitCertificate;
  else if (!checks_ok)
    r.exit_code = kExitCrossCheck;
  else
    r.exit_code = kExitOk;
  j["schema"] = kReportSchema;
  j["version"] = kArtifactVersion;
  j["cross_checks"] = checks_json(r);
  j["notices"] = notices_json(r);
  j["exit_code"] = r.exit_code;
  r.json = j.dump(2) + "\n";
}

std::vector<std::int64_t> expanded(const std::vector<std::pair<std::int64_t, std::uint64_t>>& rows) {
  std::vector<std::int64_t> out;
  for (const auto& [theta, mult] : rows) out.insert(out.end(), mult, theta);
  std::sort(out.begin(), out.end());
  return out;
}

// Numeric spectrum of the explicit graph and the walk at τ.
void simulate(Report& r, PstCertificate& cert, const Graph& g, const std::vector<std::int64_t>& exact,
              const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs, const RunOptions& opts) {
  if (g.n > opts.simulation_bound) {
    r.notices.push_back({"method", "simulation",
                         "skipped: " + std::to_string(g.n) + " vertices exceeds the simulation bound " +
                             std::to_string(opts.simulation_bound)});
    return;
  }
  const WalkSystem ws = WalkSystem::from_graph(g, 1.0, opts.simulation_bound);
  add_check(r, "reconstruction error below 1e-8", ws.reconstruction_error() < 1e-8,
            std::to_string(ws.reconstruction_error()));
  add_check(r, "numeric spectrum is integral", ws.integral());
  add_check(r, "numeric spectrum equals the exact spectrum", ws.integral() && ws.integer_shadow() == exact);
  if (cert.g <= 0) return;
  const WalkValidation v = validate_transfer(ws, pairs, cert.tau);
  cert.fidelity_deviation = v.max_deviation;
  const bool transfers = v.max_deviation <= kFidelityTolerance;
  add_check(r, "fidelity at tau and 3*tau within 1e-9", !cert.valid || transfers,
            std::to_string(pairs.size()) + " pairs, max deviation " + std::to_string(v.max_deviation));
  if (transfers) {
    add_check(r, "no transfer at tau/2", v.max_half_time_fidelity < 1.0 - 1e-3,
              "max fidelity " + std::to_string(v.max_half_time_fidelity));
    add_check(r, "return to start at 2*tau", v.max_return_deviation <= kFidelityTolerance,
              "max deviation " + std::to_string(v.max_return_deviation));
  }
  add_check(r, "pst test agrees with simulation", cert.parity_pst == transfers);
}

}  // namespace

std::string edge_list(const Graph& g) {
  std::ostringstream os;
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Report cmd_verify(Family family, std::uint32_t q, Variant variant, const RunOptions& opts) {
  checked_prime_power(q);
  if (variant == Variant::TAlternative && !(family == Family::GL && q == 3))
    throw UsageError("the t-alt connection set is defined only for GL(2,3)");
  Report r;
  const LieGroup G = LieGroup::make(family, q);
  const ConnectionSet cs = build_connection_set(G, variant);
  const SpectrumTable st = spectrum(G, cs);
  PstCertificate cert = certify(G, st);
  r.notices.push_back(method_notice());

  json j;
  j["command"] = "verify";
  j["family"] = to_string(family);
  j["q"] = q;
  j["variant"] = to_string(variant);
  j["group_order"] = G.order();
  j["field"] = tower_json(G.tower());
  j["involution"] = mat_to_string(G.matrix_field(), G.central_involution());
  json classes = json::array();
  for (const ClassLabel& c : cs.classes) classes.push_back(G.class_name(c));
  j["connection_set"] = {{"size", cs.size}, {"classes", classes}};

  std::ostringstream csv;
  csv << "family,q,char-kind,char-params,degree,theta,multiplicity,phi-sign\n";
  json rows = json::array();
  std::vector<std::pair<std::int64_t, std::uint64_t>> mults;
  for (const SpectrumRow& row : st.rows) {
    csv << to_string(family) << ',' << q << ',' << LieGroup::kind_name(row.chi) << ',' << LieGroup::params_string(row.chi)
        << ',' << row.degree << ',' << row.theta << ',' << row.multiplicity << ',' << sign_str(row.sign) << '\n';
    rows.push_back({{"character", G.char_name(row.chi)},
                    {"degree", row.degree},
                    {"theta", row.theta},
                    {"multiplicity", row.multiplicity},
                    {"sign", row.sign},
                    {"theta_mod_4", ((row.theta % 4) + 4) % 4}});
    mults.emplace_back(row.theta, row.multiplicity);
  }
  r.spectrum_csv = csv.str();
  j["spectrum"] = rows;

  add_check(r, "connection set is inverse-closed", is_inverse_closed(G, cs));
  add_check(r, "connection set avoids the identity", !contains_identity(G, cs));

  if (variant == Variant::Standard && family != Family::SL) {
    json forms = json::array();
    for (const ClosedFormCheck& c : closed_form_checks(G, st)) {
      forms.push_back({{"character", G.char_name(c.chi)},
                       {"formula", c.formula},
                       {"closed_form", c.closed_form},
                       {"class_sum", c.class_sum},
                       {"agrees", c.agrees()}});
      if (!c.agrees())
        r.notices.push_back({"erratum", to_string(family) + " closed form (" + c.formula + ")",
                             "closed form gives " + std::to_string(c.closed_form) + " for " + G.char_name(c.chi) +
                                 ", the class sum gives " + std::to_string(c.class_sum) +
                                 "; both are congruent mod 4: " +
                                 ((((c.closed_form - c.class_sum) % 4) == 0) ? "yes" : "no")});
    }
    j["closed_forms"] = forms;
  }
  if (family == Family::SL) {
    bool all = true;
    for (const ClosedFormCheck& c : closed_form_checks(G, st)) all = all && c.agrees();
    add_check(r, "theta = chi(t)/chi(1) + (q^2-1) r / (2 chi(1)) for every row", all);
  }

  if (G.order() <= opts.group_bound) {
    r.explicit_graph = true;
    const Graph g = explicit_graph(G, cs, opts.group_bound);
    r.edges = edge_list(g);
    add_check(r, "explicit graph is regular of degree |S|",
              g.regular_degree() == static_cast<std::int64_t>(cs.size) && !g.has_loops() && g.is_symmetric(),
              std::to_string(g.n) + " vertices, " + std::to_string(g.edge_count()) + " edges");
    add_check(r, "connectivity matches the certificate", g.is_connected() == cert.connected);
    if (family == Family::SL)
      add_check(r, "order-based and class-based connection sets coincide", order_based_sl_matches(G, cs, opts.group_bound),
                std::to_string(order_based_sl_count(G, opts.group_bound)) + " elements by order");
    if (family == Family::GL && q == 3 && variant == Variant::Standard && cs.size + 2 == G.order())
      r.notices.push_back({"note", "structure", "the graph is the complement of 24 disjoint copies of K2"});
    const std::vector<std::uint32_t> partner = involution_partner(G, opts.group_bound);
    const auto elements = G.enumerate(opts.group_bound);
    const auto id = static_cast<std::uint32_t>(
        std::lower_bound(elements.begin(), elements.end(), mat_identity(G.matrix_field())) - elements.begin());
    simulate(r, cert, g, expanded(mults), sample_pairs(partner, q == 3, id), opts);
  } else {
    r.notices.push_back({"method", "explicit graph",
                         "skipped: group order " + std::to_string(G.order()) + " exceeds the enumeration bound"});
  }

  r.certificate_valid = cert.valid;
  j["certificate"] = certificate_json(cert);
  finish(r, j);
  return r;
}

Report cmd_orbital(std::uint32_t q, const RunOptions& opts) {
  checked_prime_power(q);
  if (q % 4 != 3) throw UsageError("the orbital graph needs q = 3 mod 4, got q = " + std::to_string(q));
  Report r;
  const CosetSpace cs = build_coset_space(q, opts.group_bound);
  const OrbitalGroup& og = *cs.group;
  const OrbitalSpectrum os = orbital_spectrum(og);
  PstCertificate cert = certify_orbital(og, os);
  r.notices.push_back(method_notice());
  const FiniteField& F = og.field();

  json j;
  j["command"] = "orbital";
  j["q"] = q;
  j["group_order"] = og.order_G();
  j["subgroup_order"] = og.order_H();
  j["coset_count"] = og.coset_count();
  j["mode"] = cs.explicit_mode ? "explicit" : "character-sum";
  j["field"] = field_json(F);
  j["field"]["subfield"] = "F_" + std::to_string(q) + " = {x : x^" + std::to_string(q) + " = x}";
  j["z"] = {{"zeta", F.to_string(F.exp(og.zeta_log()))}, {"zeta_log", og.zeta_log()}, {"matrix", mat_to_string(F, og.z())}};
  j["rep_set_logs"] = og.rep_set();

  std::ostringstream csv;
  csv << "family,q,char-kind,char-params,degree,theta,multiplicity,phi-sign\n";
  json rows = json::array();
  bool all_div4 = true;
  std::vector<std::pair<std::int64_t, std::uint64_t>> mults;
  for (const OrbitalRow& row : os.rows) {
    csv << "orbital," << q << ',' << LieGroup::kind_name(row.chi) << ',' << LieGroup::params_string(row.chi) << ','
        << row.degree << ',' << row.theta << ',' << row.degree << ',' << sign_str(row.sign) << '\n';
    const std::int64_t e4 = ((row.e % 4) + 4) % 4;
    all_div4 = all_div4 && e4 == 0;
    rows.push_back({{"character", og.G().char_name(row.chi)},
                    {"degree", row.degree},
                    {"e", row.e},
                    {"e_mod_4", e4},
                    {"sign", row.sign},
                    {"theta", row.theta},
                    {"multiplicity", row.degree}});
    mults.emplace_back(row.theta, row.degree);
  }
  r.spectrum_csv = csv.str();
  j["spectrum"] = rows;
  add_check(r, "every E is divisible by 4", all_div4);
  std::uint64_t deg_sum = 0;
  for (const OrbitalRow& row : os.rows) deg_sum += row.degree;
  add_check(r, "degrees of Irr(G//H) sum to the coset count", deg_sum == og.coset_count(),
            std::to_string(deg_sum) + " of " + std::to_string(og.coset_count()));

  json display = json::array();
  for (const LinearDisplayCheck& d : linear_display_checks(og, os)) {
    display.push_back({{"character", og.G().char_name(d.chi)},
                       {"display_value", d.display_value},
                       {"direct_value", d.direct_value},
                       {"rescaled_value", d.rescaled_value}});
    if (!d.agrees())
      r.notices.push_back({"erratum", "closed form for E of a linear character",
                           "q(q+1)/2 ([l,l](F x F) - 2 l(S)) gives " + std::to_string(d.display_value) + " for " +
                               og.G().char_name(d.chi) + ", the direct sum gives " + std::to_string(d.direct_value) +
                               "; dividing the full sum by (q-1)^2 and the square sum by (q-1) gives " +
                               std::to_string(d.rescaled_value)});
    add_check(r, "rescaled closed form for " + og.G().char_name(d.chi) + " equals the direct sum",
              d.rescaled_value == d.direct_value);
  }
  j["linear_closed_form"] = display;

  if (cs.explicit_mode) {
    r.explicit_graph = true;
    const DoubleCosetCheck dc = check_double_cosets(cs);
    add_check(r, "Frobenius invariant matches the literal double cosets", dc.matches,
              std::to_string(dc.elements_checked) + " elements, " + std::to_string(dc.literal_count) + " double cosets" +
                  (dc.witness.empty() ? "" : ": " + dc.witness));
    add_check(r, "Irr(G//H) has one character per double coset", os.rows.size() == dc.literal_count);
    const OrbitalGraph gm = build_gamma(cs);
    r.edges = edge_list(gm.graph);
    const std::int64_t expected_degree = 1 + static_cast<std::int64_t>(q) * (q + 1) * (q + 1) * q / 2;
    add_check(r, "graph is regular of degree 1 + C(q+1,2) q(q+1)", gm.graph.regular_degree() == expected_degree,
              std::to_string(gm.graph.n) + " vertices, " + std::to_string(gm.graph.edge_count()) + " edges");
    add_check(r, "connectivity matches the certificate", gm.graph.is_connected() == cert.connected);
    const Eigen::MatrixXi Az = relation_matrix(cs, og.double_coset_of(og.z()));
    add_check(r, "A_z is a fixed-point-free involution", is_fixed_point_free_involution(Az));
    std::vector<std::uint32_t> partner(cs.size());
    for (std::uint32_t v = 0; v < cs.size(); ++v) partner[v] = cs.coset_of(mat_mul(F, cs.representatives[v], og.z()));
    simulate(r, cert, gm.graph, expanded(mults), sample_pairs(partner, true, gm.identity_vertex), opts);
    j["vertices"] = {{"H", gm.identity_vertex}, {"zH", gm.z_vertex}};
  }

  r.certificate_valid = cert.valid;
  j["certificate"] = certificate_json(cert);
  finish(r, j);
  return r;
}

std::vector<std::string> write_report_files(const Report& r, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::vector<std::string> written;
  auto put = [&](const std::string& name, const std::string& body) {
    const std::string path = (fs::path(out_dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body;
    written.push_back(path);
  };
  put("report.json", r.json);
  put("spectrum.csv", r.spectrum_csv);
  if (r.explicit_graph) put("graph.edges", r.edges);
  return written;
}

std::string cmd_export(const std::string& target, std::uint32_t q, const std::string& format,
                       const std::string& out_dir, const RunOptions& opts) {
  if (format != "edges" && format != "csv" && format != "json") throw UsageError("unknown format: " + format);
  Report r;
  if (target == "orbital")
    r = cmd_orbital(q, opts);
  else if (target == "gl" || target == "gu" || target == "sl")
    r = cmd_verify(family_from_string(target), q, Variant::Standard, opts);
  else
    throw UsageError("unknown target: " + target);
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::string name, body;
  if (format == "edges") {
    if (!r.explicit_graph) throw UsageError("the " + target + " graph at q = " + std::to_string(q) + " is too large to build");
    name = "graph.edges";
    body = r.edges;
  } else if (format == "csv") {
    name = "spectrum.csv";
    body = r.spectrum_csv;
  } else {
    name = "report.json";
    body = r.json;
  }
  const std::string path = (fs::path(out_dir) / name).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
  return path;
}

}  // namespace pstlie
