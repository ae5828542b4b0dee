#pragma once

#include <string>

#include "fuzzydyn/analysis.hpp"

namespace fuzzydyn {

// Single structured configuration file driving an analysis run; no
// environment variables carry semantics.
struct RunConfig {
  System system = System::full_shift(2);
  BallSpec::Level level = BallSpec::Level::Base;
  FuzzyMetricKind metric = FuzzyMetricKind::Endo;
  int basis_resolution = 3;
  int horizon = 64;
  std::vector<FamilySpec> families;

  struct Check {
    std::string kind;  // transitive | recurrent | point_transitive |
                       // point_recurrent | devaney | specification
    int param = 0;     // ell / ap length / instance count
  };
  std::vector<Check> checks;

  SearchBudget budget;
  uint64_t seed = 1;
  std::string output = "report.json";
  std::string point;  // optional start point for point_transitive
  int jobs = 1;
};

RunConfig parse_config_json(const std::string& text);
RunConfig load_config(const std::string& path);

struct AnalysisOutcome {
  bool all_hold = false;
  std::string report_json;
};

// Runs every requested check and assembles the report. Identical config and
// seed produce byte-identical reports apart from the timings block.
AnalysisOutcome run_analysis(const RunConfig& cfg);

// Re-validates the certificates embedded in a report against the recorded
// return sets; returns the number of entries that fail re-validation.
int selfcheck_report(const std::string& report_json);

std::string tool_version();

}  // namespace fuzzydyn
