// pstgraph: build, certify and export graphs with perfect state transfer.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pstlie/errors.hpp"
#include "pstlie/report.hpp"

namespace {

void print_summary(const pstlie::Report& r) {
  std::cout << "certificate: " << (r.certificate_valid ? "valid" : "INVALID") << '\n';
  for (const auto& c : r.checks)
    std::cout << (c.passed ? "  ok    " : "  FAIL  ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
  for (const auto& n : r.notices) std::cout << "  " << n.kind << ": " << n.subject << ": " << n.detail << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect state transfer on GL(2,q), GU(2,q), SL(2,q) and GL(2,q^2)//GL(2,q)"};
  app.require_subcommand(1);

  std::string family = "gl", variant = "standard", out_dir, export_dir = ".", target, format = "json";
  std::uint32_t q = 3;
  pstlie::RunOptions opts;

  auto* verify = app.add_subcommand("verify", "Certify a normal Cayley graph and cross-check it");
  verify->add_option("--family", family, "gl, gu or sl")->check(CLI::IsMember({"gl", "gu", "sl"}));
  verify->add_option("--q", q, "odd prime power")->required();
  verify->add_option("--variant", variant, "standard or t-alt")->check(CLI::IsMember({"standard", "t-alt"}));
  verify->add_option("--brute-force-bound", opts.simulation_bound, "largest vertex count to simulate");
  verify->add_option("--out-dir", out_dir, "write report.json, spectrum.csv and graph.edges here");

  auto* orbital = app.add_subcommand("orbital", "Certify the orbital graph on GL(2,q^2)/GL(2,q)");
  orbital->add_option("--q", q, "prime power, 3 mod 4")->required();
  orbital->add_option("--brute-force-bound", opts.simulation_bound, "largest vertex count to simulate");
  orbital->add_option("--out-dir", out_dir, "write report.json, spectrum.csv and graph.edges here");

  auto* exporter = app.add_subcommand("export", "Write one output file for a target");
  exporter->add_option("--target", target, "gl, gu, sl or orbital")->required();
  exporter->add_option("--q", q, "prime power")->required();
  exporter->add_option("--format", format, "edges, csv or json")->check(CLI::IsMember({"edges", "csv", "json"}));
  exporter->add_option("--brute-force-bound", opts.simulation_bound, "largest vertex count to simulate");
  exporter->add_option("--out-dir", export_dir, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pstlie::kExitUsage;
  }

  try {
    if (*exporter) {
      std::cout << pstlie::cmd_export(target, q, format, export_dir, opts) << '\n';
      return pstlie::kExitOk;
    }
    const pstlie::Report r = *verify ? pstlie::cmd_verify(pstlie::family_from_string(family), q,
                                                          pstlie::variant_from_string(variant), opts)
                                     : pstlie::cmd_orbital(q, opts);
    print_summary(r);
    if (!out_dir.empty())
      for (const auto& path : pstlie::write_report_files(r, out_dir)) std::cout << "wrote " << path << '\n';
    return r.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return pstlie::kExitUsage;
  } catch (const pstlie::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return pstlie::kExitUsage;
  } catch (const pstlie::NonIntegralValue& e) {
    std::cerr << "certificate failure: " << e.what() << '\n';
    return pstlie::kExitCertificate;
  }
}
