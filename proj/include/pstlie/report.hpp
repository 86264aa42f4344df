#pragma once

// Orchestration behind the pstgraph command line: build, certify,
// cross-check and render reports.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pstlie/cayley.hpp"
#include "pstlie/ctqw.hpp"
#include "pstlie/group.hpp"

namespace pstlie {

inline constexpr const char* kReportSchema = "pstgraph-report/1";
inline constexpr const char* kArtifactVersion = "1.0.0";

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitCertificate = 2, kExitCrossCheck = 3 };

/// Bad command-line input; maps to exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunOptions {
  std::uint64_t group_bound = kDefaultGroupBound;
  std::uint64_t simulation_bound = kDefaultSimulationBound;
};

struct CrossCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Notice {
  std::string kind;  // "erratum", "method" or "note"
  std::string subject;
  std::string detail;
};

struct Report {
  std::string json;          // sorted keys, two-space indent, trailing newline
  std::string spectrum_csv;
  std::string edges;         // empty unless the graph was built explicitly
  bool certificate_valid = false;
  bool explicit_graph = false;
  std::vector<CrossCheck> checks;
  std::vector<Notice> notices;
  int exit_code = kExitOk;
};

Report cmd_verify(Family family, std::uint32_t q, Variant variant, const RunOptions& opts = {});
Report cmd_orbital(std::uint32_t q, const RunOptions& opts = {});

/// Writes one of graph.edges, spectrum.csv or report.json for the target
/// (gl, gu, sl or orbital) into out_dir and returns the path written.
std::string cmd_export(const std::string& target, std::uint32_t q, const std::string& format,
                       const std::string& out_dir, const RunOptions& opts = {});

/// Writes report.json, spectrum.csv and, when present, graph.edges.
std::vector<std::string> write_report_files(const Report& r, const std::string& out_dir);

/// "u v" lines, u < v, lexicographic.
std::string edge_list(const Graph& g);

}  // namespace pstlie
