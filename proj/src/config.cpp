#include "fuzzydyn/config.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "fuzzydyn/generators.hpp"
#include "fuzzydyn/serialize.hpp"
#include "json.hpp"

namespace fuzzydyn {

using ordered_json = nlohmann::ordered_json;

std::string tool_version() { return "0.1.0"; }

namespace {

System system_from_json(const ordered_json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "full_shift") return System::full_shift(j.at("alphabet").get<int>());
  if (kind == "circle_rotation") {
    int bits = j.value("precision_bits", 64);
    if (!j.contains("angle") || j.at("angle") == "golden") return System::golden_rotation(bits);
    return System::circle_rotation(bits, j.at("angle").get<uint64_t>());
  }
  if (kind == "finite_map") {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<double> dist;
    for (const auto& row : j.at("rows"))
      for (const auto& v : row) dist.push_back(v.get<double>());
    auto table = j.at("table").get<std::vector<int>>();
    return System::finite_map(Space::finite(std::move(labels), std::move(dist)),
                              std::move(table));
  }
  if (kind == "product")
    return System::product(system_from_json(j.at("base")), j.at("copies").get<int>());
  throw usage_error("unknown system kind: " + kind);
}

ordered_json system_to_json(const System& sys) {
  ordered_json j;
  if (sys.is_full_shift()) {
    j["kind"] = "full_shift";
    j["alphabet"] = sys.full_shift_desc().alphabet;
  } else if (sys.is_rotation()) {
    j["kind"] = "circle_rotation";
    j["precision_bits"] = sys.rotation_desc().precision_bits;
    j["angle"] = sys.rotation_desc().angle;
  } else if (sys.is_finite_map()) {
    const auto& fm = sys.finite_map_desc();
    const auto& f = fm.space.finite_desc();
    j["kind"] = "finite_map";
    j["labels"] = f.labels;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < f.size(); ++i) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < f.size(); ++c) row.push_back(f.at(i, c));
      rows.push_back(row);
    }
    j["rows"] = rows;
    j["table"] = fm.table;
  } else {
    j["kind"] = "product";
    j["base"] = system_to_json(*sys.product_desc().base);
    j["copies"] = sys.product_desc().copies;
  }
  return j;
}

RunConfig::Check parse_check(const std::string& text) {
  auto colon = text.find(':');
  RunConfig::Check c;
  c.kind = text.substr(0, colon == std::string::npos ? text.size() : colon);
  if (colon != std::string::npos) c.param = std::stoi(text.substr(colon + 1));
  static const char* known[] = {"transitive", "recurrent",      "point_transitive",
                                "point_recurrent", "devaney",   "specification"};
  for (const char* k : known)
    if (c.kind == k) return c;
  throw usage_error("unknown check: " + c.kind);
}

}  // namespace

RunConfig parse_config_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw usage_error(std::string("config parse failure: ") + e.what());
  }
  RunConfig cfg;
  cfg.system = system_from_json(j.at("system"));
  std::string level = j.value("level", "base");
  if (level == "base")
    cfg.level = BallSpec::Level::Base;
  else if (level == "hyper")
    cfg.level = BallSpec::Level::Hyper;
  else if (level == "fuzzy")
    cfg.level = BallSpec::Level::Fuzzy;
  else
    throw usage_error("unknown level: " + level);
  cfg.metric = fuzzy_metric_parse(j.value("fuzzy_metric", "endo"));
  cfg.basis_resolution = j.value("basis_resolution", 3);
  cfg.horizon = j.value("horizon", 64);
  if (cfg.horizon < 1) throw usage_error("horizon must be positive");
  for (const auto& f : j.value("families", ordered_json::array()))
    cfg.families.push_back(FamilySpec::parse(f.get<std::string>()));
  for (const auto& c : j.value("checks", ordered_json::array()))
    cfg.checks.push_back(parse_check(c.get<std::string>()));
  if (cfg.checks.empty()) throw usage_error("at least one check must be requested");
  if (j.contains("budgets")) {
    const auto& b = j.at("budgets");
    cfg.budget.samples_per_ball = b.value("samples_per_ball", cfg.budget.samples_per_ball);
    cfg.budget.hyper_subset_budget = b.value("hyper_subset_budget", cfg.budget.hyper_subset_budget);
    cfg.budget.fuzzy_candidate_budget =
        b.value("fuzzy_candidate_budget", cfg.budget.fuzzy_candidate_budget);
    cfg.budget.level_grid = b.value("level_grid", cfg.budget.level_grid);
  }
  cfg.seed = j.value("seed", 1);
  cfg.output = j.value("output", "report.json");
  cfg.point = j.value("point", "");
  cfg.jobs = j.value("jobs", 1);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config_json(os.str());
}

namespace {

ordered_json certificate_to_json(const FamilyCertificate& c) {
  return ordered_json{{"kind", c.kind}, {"a", c.a}, {"b", c.b}, {"c", c.c}, {"value", c.value}};
}

FamilyCertificate certificate_from_json(const ordered_json& j) {
  FamilyCertificate c;
  c.kind = j.at("kind").get<std::string>();
  c.a = j.at("a").get<long long>();
  c.b = j.at("b").get<long long>();
  c.c = j.at("c").get<long long>();
  c.value = j.at("value").get<double>();
  return c;
}

ordered_json report_check(const CheckReport& rep, const std::string& family) {
  ordered_json jc;
  jc["check"] = rep.check;
  jc["holds"] = rep.holds;
  jc["budget"] = rep.budget;
  jc["notes"] = rep.notes;
  ordered_json entries = ordered_json::array();
  for (const auto& e : rep.entries) {
    ordered_json je;
    je["pair"] = e.pair_name;
    je["holds"] = e.verdict.holds;
    je["family"] = family;
    je["certificate"] = certificate_to_json(e.verdict.certificate);
    je["note"] = e.verdict.truncation_note;
    je["horizon"] = e.returns.horizon;
    je["exactness"] =
        e.returns.exactness == ReturnSet::Exactness::Exact ? "exact" : "sound_positives";
    je["elements"] = e.returns.elems;
    entries.push_back(std::move(je));
  }
  jc["entries"] = std::move(entries);
  return jc;
}

Point default_probe_point(const System& sys, int resolution) {
  if (sys.is_full_shift())
    return de_bruijn_point(sys.full_shift_desc().alphabet, std::max(1, resolution));
  if (sys.is_finite_map()) return Point::finite(0);
  if (sys.is_rotation()) return Point::circle(0);
  throw usage_error("no default probe point for product systems; set \"point\"");
}

}  // namespace

AnalysisOutcome run_analysis(const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  ordered_json report;
  report["tool"] = "fuzzydyn";
  report["version"] = tool_version();

  ordered_json echo;
  echo["system"] = system_to_json(cfg.system);
  echo["level"] = cfg.level == BallSpec::Level::Base    ? "base"
                  : cfg.level == BallSpec::Level::Hyper ? "hyper"
                                                        : "fuzzy";
  echo["fuzzy_metric"] = fuzzy_metric_name(cfg.metric);
  echo["basis_resolution"] = cfg.basis_resolution;
  echo["horizon"] = cfg.horizon;
  ordered_json fams = ordered_json::array();
  for (const auto& f : cfg.families) fams.push_back(f.str());
  echo["families"] = fams;
  echo["seed"] = cfg.seed;
  echo["budget"] = cfg.budget.str();
  report["config"] = std::move(echo);

  auto base = basis(cfg.system, cfg.basis_resolution);
  auto balls = lift_basis(cfg.system, base, cfg.level, cfg.metric);

  bool all_hold = true;
  ordered_json checks = ordered_json::array();
  std::vector<double> per_check_ms;

  for (const auto& chk : cfg.checks) {
    auto c0 = std::chrono::steady_clock::now();
    if (chk.kind == "transitive" || chk.kind == "recurrent") {
      if (cfg.families.empty())
        throw usage_error("the " + chk.kind + " check needs at least one family");
      for (const auto& fam : cfg.families) {
        CheckReport rep =
            chk.kind == "transitive"
                ? check_A_transitive(cfg.system, balls, fam, cfg.horizon, cfg.budget, cfg.jobs)
                : check_A_recurrent(cfg.system, balls, fam, std::max(1, chk.param), cfg.horizon,
                                    cfg.budget, cfg.jobs);
        all_hold &= rep.holds;
        checks.push_back(report_check(rep, fam.str()));
      }
    } else if (chk.kind == "point_transitive") {
      Point x = cfg.point.empty() ? default_probe_point(cfg.system, cfg.basis_resolution)
                                  : parse_point_token(cfg.system.space(), cfg.point);
      auto base_balls = lift_basis(cfg.system, base, BallSpec::Level::Base, cfg.metric);
      auto rep = check_point_transitive(cfg.system, x, base_balls, cfg.horizon);
      all_hold &= rep.holds;
      checks.push_back(report_check(rep, ""));
    } else if (chk.kind == "point_recurrent") {
      Space sp = cfg.system.space();
      std::vector<Point> sample;
      for (const auto& e : base) sample.push_back(ball_representative(sp, e.ball));
      double radius = ball_radius(sp, base.front().ball);
      auto rep = check_point_recurrent(cfg.system, sample, radius, cfg.horizon, chk.param);
      all_hold &= rep.holds;
      checks.push_back(report_check(rep, chk.param > 0 ? "ap:" + std::to_string(chk.param) : ""));
    } else if (chk.kind == "devaney") {
      auto base_balls = lift_basis(cfg.system, base, BallSpec::Level::Base, cfg.metric);
      auto rep = check_devaney(cfg.system, base_balls, cfg.horizon, cfg.budget);
      all_hold &= rep.holds;
      checks.push_back(report_check(rep, "infinite:1"));
    } else if (chk.kind == "specification") {
      int count = std::max(1, chk.param == 0 ? 20 : chk.param);
      RandomSource rng(cfg.seed);
      CheckReport rep;
      rep.check = "specification(" + std::to_string(count) + ")";
      rep.budget = cfg.budget.str();
      if (!cfg.system.is_full_shift())
        throw usage_error("the specification check runs on full shifts");
      int good = 0;
      for (int i = 0; i < count; ++i) {
        auto inst = gen_spec_instance(rng, cfg.system.full_shift_desc().alphabet);
        Point x = build_spec_witness(cfg.system, inst);
        bool ok = verify_specification(cfg.system, x, inst);
        good += ok ? 1 : 0;
        PairCheck pc;
        pc.pair_name = "instance" + std::to_string(i);
        pc.returns = ReturnSet::of(1, {0}, ReturnSet::Exactness::Exact);
        pc.verdict.holds = ok;
        pc.verdict.certificate = {"spec", inst.n_eps, inst.intervals.back().second, 0, inst.eps};
        pc.verdict.truncation_note = "witness " + point_str(x);
        rep.entries.push_back(std::move(pc));
      }
      rep.holds = good == count;
      all_hold &= rep.holds;
      checks.push_back(report_check(rep, ""));
    }
    auto c1 = std::chrono::steady_clock::now();
    per_check_ms.push_back(std::chrono::duration<double, std::milli>(c1 - c0).count());
  }

  report["checks"] = std::move(checks);
  auto t1 = std::chrono::steady_clock::now();
  ordered_json timings;
  timings["total_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  timings["per_check_ms"] = per_check_ms;
  report["timings"] = std::move(timings);

  return {all_hold, report.dump(2) + "\n"};
}

int selfcheck_report(const std::string& report_json) {
  ordered_json j;
  try {
    j = ordered_json::parse(report_json);
  } catch (const std::exception& e) {
    throw usage_error(std::string("report parse failure: ") + e.what());
  }
  int failures = 0;
  for (const auto& chk : j.value("checks", ordered_json::array())) {
    for (const auto& e : chk.value("entries", ordered_json::array())) {
      std::string family = e.value("family", "");
      if (family.empty() || !e.value("holds", false)) continue;
      std::string cert_kind = e.at("certificate").at("kind").get<std::string>();
      if (cert_kind == "periodic" || cert_kind == "spec") continue;
      auto elems = e.at("elements").get<std::vector<int>>();
      auto r = ReturnSet::of(e.at("horizon").get<int>(), std::move(elems),
                             e.value("exactness", "exact") == "exact"
                                 ? ReturnSet::Exactness::Exact
                                 : ReturnSet::Exactness::SoundPositives);
      auto fam = FamilySpec::parse(family);
      auto cert = certificate_from_json(e.at("certificate"));
      if (!validate_certificate(fam, r, cert)) ++failures;
      if (!member(fam, r).holds) ++failures;
    }
  }
  return failures;
}

}  // namespace fuzzydyn
