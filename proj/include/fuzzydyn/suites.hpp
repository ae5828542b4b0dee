#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fuzzydyn::suites {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few failure descriptions

  SuiteResult() = default;
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  void tally(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      if (failures.size() < 12) failures.push_back(what);
    }
  }
  void merge(const SuiteResult& other) {
    passed += other.passed;
    failed += other.failed;
    for (const auto& f : other.failures)
      if (failures.size() < 24) failures.push_back(other.name + ": " + f);
  }
};

// Randomized property sweeps. Counts are the number of generated cases.
SuiteResult metric_chain(uint64_t seed, int cases);
SuiteResult characteristic_collapse(uint64_t seed, int cases);
SuiteResult skorokhod_oracle_agreement(uint64_t seed, int cases, int grid);
SuiteResult graph_oracle_agreement(uint64_t seed, int cases, int resolution);
SuiteResult metric_axioms(uint64_t seed, int triples);
SuiteResult cut_stability(uint64_t seed, int cases);
SuiteResult zadeh_commutation(uint64_t seed, int level_cases, int compose_cases);
SuiteResult quantization_bound(uint64_t seed, int cases);
SuiteResult family_predicates(uint64_t seed, int agreement_cases, int monotone_cases,
                              int overlap_cases);
SuiteResult witness_transfers(uint64_t seed, int projections, int lifts, int recurrences,
                              int periodics);
SuiteResult hyper_roundtrip(uint64_t seed, int cases);
SuiteResult specification_suite(uint64_t seed, int builds, int projections);

// Fixed scenario sweeps.
SuiteResult shift_verdicts(int horizon);   // full shift, cylinder basis <= 4
SuiteResult rotation_verdicts();           // golden rotation, arc basis 1/8, H = 512

// Named aggregate suites exposed by the command line.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, uint64_t seed);

}  // namespace fuzzydyn::suites
