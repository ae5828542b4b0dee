#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fuzzydyn/config.hpp"
#include "fuzzydyn/serialize.hpp"
#include "fuzzydyn/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;

int cmd_metric(const std::string& file_u, const std::string& file_v, const std::string& name) {
  auto pu = fuzzydyn::load_fuzzy_file(file_u);
  auto pv = fuzzydyn::load_fuzzy_file(file_v);
  if (!(pu.space == pv.space)) throw fuzzydyn::usage_error("inputs declare different spaces");
  auto kind = fuzzydyn::fuzzy_metric_parse(name);
  std::cout << "metric " << fuzzydyn::fuzzy_metric_name(kind) << "\n";
  if (kind == fuzzydyn::FuzzyMetricKind::Skorokhod) {
    auto [value, align] = fuzzydyn::d_skorokhod(pu.space, pu.set, pv.set);
    std::cout << "value " << value << "\n";
    for (const auto& [level, image] : align.images)
      std::cout << "alignment " << level.str() << " -> " << image << "\n";
  } else {
    std::cout << "value " << fuzzydyn::fuzzy_metric_eval(kind, pu.space, pu.set, pv.set) << "\n";
  }
  return kExitPass;
}

int cmd_analyze(const std::string& config_path, const std::string& out_override, uint64_t seed,
                bool seed_set, int jobs) {
  auto cfg = fuzzydyn::load_config(config_path);
  if (seed_set) cfg.seed = seed;
  if (jobs > 0) cfg.jobs = jobs;
  if (!out_override.empty()) cfg.output = out_override;
  auto outcome = fuzzydyn::run_analysis(cfg);
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw fuzzydyn::usage_error("cannot write " + cfg.output);
  out << outcome.report_json;
  std::cout << (outcome.all_hold ? "all requested verdicts hold at scale"
                                 : "some requested verdict failed")
            << "; report written to " << cfg.output << "\n";
  return outcome.all_hold ? kExitPass : kExitVerdictFail;
}

int cmd_verify(const std::string& suite, uint64_t seed) {
  auto res = fuzzydyn::suites::run_suite(suite, seed);
  std::cout << "suite " << suite << ": " << res.passed << " passed, " << res.failed
            << " failed\n";
  for (const auto& f : res.failures) std::cout << "  FAIL " << f << "\n";
  return res.failed == 0 ? kExitPass : kExitVerdictFail;
}

int cmd_selfcheck(const std::string& report_path) {
  std::ifstream in(report_path, std::ios::binary);
  if (!in) throw fuzzydyn::usage_error("cannot open " + report_path);
  std::ostringstream os;
  os << in.rdbuf();
  int failures = fuzzydyn::selfcheck_report(os.str());
  std::cout << (failures == 0 ? "all certificates re-validate"
                              : std::to_string(failures) + " certificates failed re-validation")
            << "\n";
  return failures == 0 ? kExitPass : kExitVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy dynamical systems toolkit"};
  app.require_subcommand(1);

  std::string file_u, file_v, metric_name;
  auto* metric = app.add_subcommand("metric", "distance between two serialized fuzzy sets");
  metric->add_option("file_u", file_u)->required();
  metric->add_option("file_v", file_v)->required();
  metric->add_option("metric", metric_name)->required();

  std::string config_path, out_path;
  uint64_t seed = 1;
  int jobs = 0;
  auto* analyze = app.add_subcommand("analyze", "run the checks requested by a config file");
  analyze->add_option("--config", config_path)->required();
  analyze->add_option("--out", out_path);
  auto* seed_opt = analyze->add_option("--seed", seed);
  analyze->add_option("--jobs", jobs);

  std::string suite;
  uint64_t vseed = 1;
  auto* verify = app.add_subcommand("verify", "run a named property suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--seed", vseed);

  std::string report_path;
  auto* selfcheck = app.add_subcommand("selfcheck", "re-validate a report's certificates");
  selfcheck->add_option("report", report_path)->required();

  try {
    app.parse(argc, argv);
    if (metric->parsed()) return cmd_metric(file_u, file_v, metric_name);
    if (analyze->parsed())
      return cmd_analyze(config_path, out_path, seed, seed_opt->count() > 0, jobs);
    if (verify->parsed()) return cmd_verify(suite, vseed);
    if (selfcheck->parsed()) return cmd_selfcheck(report_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  } catch (const fuzzydyn::usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerdictFail;
  }
  return kExitUsage;
}
