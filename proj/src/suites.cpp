#include "fuzzydyn/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzydyn/generators.hpp"

namespace fuzzydyn::suites {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

SuiteResult metric_chain(uint64_t seed, int cases) {
  SuiteResult res{"metric_chain"};
  RandomSource rng(seed);
  Space sp = random_finite_space(12, rng);
  for (int i = 0; i < cases; ++i) {
    StepFuzzySet u = gen_random(sp, 4, 6, rng.next_u64());
    StepFuzzySet v = gen_random(sp, 4, 6, rng.next_u64());
    double de = d_endo(sp, u, v);
    double ds = d_sendo(sp, u, v);
    double d0 = d_skorokhod(sp, u, v).first;
    double di = d_inf(sp, u, v);
    const double slack = 1e-9;
    bool ok = de <= ds + slack && ds <= d0 + slack && d0 <= di + slack && de <= 1.0 + 1e-12;
    res.tally(ok, "case " + std::to_string(i) + ": dE=" + fmt(de) + " dS=" + fmt(ds) +
                      " d0=" + fmt(d0) + " dinf=" + fmt(di));
  }
  return res;
}

SuiteResult characteristic_collapse(uint64_t seed, int cases) {
  SuiteResult res{"characteristic_collapse"};
  RandomSource rng(seed);
  Space sp = random_finite_space(12, rng);
  for (int i = 0; i < cases; ++i) {
    StepFuzzySet u = gen_random(sp, 4, 6, rng.next_u64());
    StepFuzzySet chi = from_characteristic(random_compact(sp, 5, rng));
    double d0 = d_skorokhod(sp, u, chi).first;
    double di = d_inf(sp, u, chi);
    res.tally(std::fabs(d0 - di) <= 1e-9,
              "case " + std::to_string(i) + ": d0=" + fmt(d0) + " dinf=" + fmt(di));
  }
  return res;
}

SuiteResult skorokhod_oracle_agreement(uint64_t seed, int cases, int grid) {
  SuiteResult res{"skorokhod_oracle"};
  RandomSource rng(seed);
  Space sp = random_finite_space(12, rng);
  for (int i = 0; i < cases; ++i) {
    StepFuzzySet u = gen_random_coarse(sp, 4, 6, rng);
    StepFuzzySet v = gen_random_coarse(sp, 4, 6, rng);
    double exact = d_skorokhod(sp, u, v).first;
    double approx = skorokhod_oracle(sp, u, v, grid);
    res.tally(std::fabs(exact - approx) <= 2.0 / grid + 1e-12,
              "case " + std::to_string(i) + ": exact=" + fmt(exact) + " oracle=" + fmt(approx));
  }
  return res;
}

SuiteResult graph_oracle_agreement(uint64_t seed, int cases, int resolution) {
  SuiteResult res{"graph_oracles"};
  RandomSource rng(seed);
  Space sp = random_finite_space(12, rng);
  for (int i = 0; i < cases; ++i) {
    StepFuzzySet u = gen_random(sp, 4, 6, rng.next_u64());
    StepFuzzySet v = gen_random(sp, 4, 6, rng.next_u64());
    double de = d_endo(sp, u, v);
    double deo = endo_oracle(sp, u, v, resolution);
    double ds = d_sendo(sp, u, v);
    double dso = sendo_oracle(sp, u, v, resolution);
    bool ok = std::fabs(de - deo) <= 1.0 / resolution + 1e-12 &&
              std::fabs(ds - dso) <= 1.0 / resolution + 1e-12;
    res.tally(ok, "case " + std::to_string(i) + ": dE=" + fmt(de) + "/" + fmt(deo) +
                      " dS=" + fmt(ds) + "/" + fmt(dso));
  }
  return res;
}

SuiteResult metric_axioms(uint64_t seed, int triples) {
  SuiteResult res{"metric_axioms"};
  RandomSource rng(seed);
  Space sp = random_finite_space(10, rng);
  auto eval = [&](int which, const StepFuzzySet& a, const StepFuzzySet& b) {
    switch (which) {
      case 0: return d_endo(sp, a, b);
      case 1: return d_sendo(sp, a, b);
      case 2: return d_skorokhod(sp, a, b).first;
      default: return d_inf(sp, a, b);
    }
  };
  const char* names[] = {"endo", "sendo", "skorokhod", "inf"};
  for (int which = 0; which < 4; ++which) {
    for (int i = 0; i < triples; ++i) {
      StepFuzzySet u = gen_random(sp, 3, 5, rng.next_u64());
      StepFuzzySet v = gen_random(sp, 3, 5, rng.next_u64());
      StepFuzzySet w = gen_random(sp, 3, 5, rng.next_u64());
      double uv = eval(which, u, v), vu = eval(which, v, u);
      double uw = eval(which, u, w), vw = eval(which, v, w);
      double uu = eval(which, u, u);
      bool ok = std::fabs(uv - vu) <= 1e-9 && uu <= 1e-12 && uw <= uv + vw + 1e-9;
      res.tally(ok, std::string(names[which]) + " triple " + std::to_string(i) + ": uv=" +
                        fmt(uv) + " vu=" + fmt(vu) + " uu=" + fmt(uu) + " uw=" + fmt(uw) +
                        " uv+vw=" + fmt(uv + vw));
    }
  }
  return res;
}

SuiteResult cut_stability(uint64_t seed, int cases) {
  SuiteResult res{"cut_stability"};
  RandomSource rng(seed);
  for (int i = 0; i < cases; ++i) {
    auto inst = gen_stability_instance(rng);
    double delta = 0.0;
    Rational bad;
    bool ok = level_stability_check(inst.space, inst.center, inst.set, 1e-12, &delta, &bad);
    res.tally(ok, "case " + std::to_string(i) + ": delta=" + fmt(delta) +
                      " offending level=" + bad.str());
  }
  return res;
}

SuiteResult zadeh_commutation(uint64_t seed, int level_cases, int compose_cases) {
  SuiteResult res{"zadeh_commutation"};
  RandomSource rng(seed);
  for (int i = 0; i < level_cases; ++i) {
    System sys = rng.coin(0.5) ? System::full_shift(2)
                               : random_finite_map(5 + static_cast<int>(rng.below(6)), rng);
    Space sp = sys.space();
    StepFuzzySet u = gen_random(sp, 4, 5, rng.next_u64());
    long long n = rng.below(6);
    long long q = 1 + rng.below(8);
    Rational alpha(static_cast<long long>(rng.below(q)) , q == 0 ? 1 : q);
    if (alpha > Rational(1)) alpha = Rational(1);
    CompactSet via_fuzzy = alpha_level(zadeh_iterate(sys, u, n), alpha);
    CompactSet via_hyper = hyper_iterate(sys, alpha_level(u, alpha), n);
    res.tally(via_fuzzy == via_hyper, "cut commutation case " + std::to_string(i));
  }
  for (int i = 0; i < compose_cases; ++i) {
    System sys = random_finite_map(5 + static_cast<int>(rng.below(6)), rng);
    const auto& fm = sys.finite_map_desc();
    long long n = rng.below(6);
    // Table of the n-th iterate.
    std::vector<int> table_n(fm.table.size());
    for (size_t j = 0; j < fm.table.size(); ++j)
      table_n[j] = iterate(sys, Point::finite(static_cast<int>(j)), n).as_finite().index;
    System sys_n = System::finite_map(fm.space, std::move(table_n));
    StepFuzzySet u = gen_random(sys.space(), 4, 5, rng.next_u64());
    res.tally(zadeh_iterate(sys, u, n) == zadeh_image(sys_n, u),
              "composition case " + std::to_string(i));
  }
  return res;
}

SuiteResult quantization_bound(uint64_t seed, int cases) {
  SuiteResult res{"quantization_bound"};
  RandomSource rng(seed);
  for (int i = 0; i < cases; ++i) {
    Space sp = rng.coin(0.5) ? random_finite_space(12, rng) : Space::shift(2);
    StepFuzzySet u = gen_random(sp, 6, 6, rng.next_u64());
    double eps = 0.02 + rng.unit();
    auto q = quantize(sp, u, eps);
    double gap = d_inf(sp, u, q.quantized);
    bool subset = std::includes(u.levels.begin(), u.levels.end(), q.quantized.levels.begin(),
                                q.quantized.levels.end());
    bool ok = gap <= eps && q.achieved_bound <= eps && subset &&
              q.quantized.levels.back() == Rational(1) && std::fabs(gap - q.achieved_bound) <= 1e-12;
    res.tally(ok, "case " + std::to_string(i) + ": eps=" + fmt(eps) + " gap=" + fmt(gap) +
                      " bound=" + fmt(q.achieved_bound));
  }
  return res;
}

SuiteResult family_predicates(uint64_t seed, int agreement_cases, int monotone_cases,
                              int overlap_cases) {
  SuiteResult res{"family_predicates"};
  RandomSource rng(seed);

  // Brute enumeration of (start, diff) pairs, independent of the detector.
  auto ap_brute = [](const ReturnSet& r, long long l) {
    for (int start : r.elems)
      for (long long d = 1; start + d * l <= r.horizon; ++d) {
        bool all = true;
        for (long long j = 1; j <= l && all; ++j) all = r.contains(static_cast<int>(start + j * d));
        if (all) return true;
      }
    return false;
  };
  // Window densities by direct membership scans.
  auto ubd_brute = [](const ReturnSet& r, int min_window) {
    double best = 0.0;
    for (int m = 0; m <= r.horizon; ++m)
      for (int end = m + min_window; end <= r.horizon; ++end) {
        int cnt = 0;
        for (int n = m; n <= end; ++n) cnt += r.contains(n) ? 1 : 0;
        best = std::max(best, static_cast<double>(cnt) / (end - m + 1));
      }
    return best;
  };

  for (int i = 0; i < agreement_cases; ++i) {
    int horizon = 32 + static_cast<int>(rng.below(97));
    ReturnSet r = random_return_set(horizon, 0.05 + 0.6 * rng.unit(), rng);
    long long l = 2 + rng.below(5);
    bool det = member(FamilySpec::ap(l), r).holds;
    bool brute = ap_brute(r, l);
    res.tally(det == brute, "ap agreement case " + std::to_string(i));
    int mw = std::max(1, horizon / 4);
    double d1 = upper_banach_density(r, mw);
    double d2 = ubd_brute(r, mw);
    res.tally(std::fabs(d1 - d2) <= 1e-12, "ubd agreement case " + std::to_string(i));
  }

  for (int i = 0; i < monotone_cases; ++i) {
    int horizon = 24 + static_cast<int>(rng.below(105));
    ReturnSet small = random_return_set(horizon, 0.05 + 0.5 * rng.unit(), rng);
    auto grown = small.elems;
    for (int n = 0; n <= horizon; ++n)
      if (rng.coin(0.3)) grown.push_back(n);
    ReturnSet big = ReturnSet::of(horizon, std::move(grown), ReturnSet::Exactness::Exact);
    FamilySpec fams[] = {FamilySpec::infinite(1 + rng.below(8)),
                         FamilySpec::cofinite(1 + rng.below(horizon)),
                         FamilySpec::thick(1 + rng.below(6)),
                         FamilySpec::syndetic(1 + rng.below(12)),
                         FamilySpec::ap(1 + rng.below(5)),
                         FamilySpec::upper_banach(0.05 + 0.9 * rng.unit())};
    for (const auto& fam : fams) {
      bool ok = !member(fam, small).holds || member(fam, big).holds;
      res.tally(ok, fam.str() + " monotonicity case " + std::to_string(i));
    }
  }

  for (int i = 0; i < overlap_cases; ++i) {
    int horizon = 48 + static_cast<int>(rng.below(81));
    long long g = 1 + rng.below(8);
    // A thick set: sprinkle plus one run of g+1; B syndetic: one element per
    // g+1 window.
    std::vector<int> a_elems;
    int run_start = static_cast<int>(rng.below(horizon - g));
    for (long long n = run_start; n <= run_start + g; ++n) a_elems.push_back(static_cast<int>(n));
    for (int n = 0; n <= horizon; ++n)
      if (rng.coin(0.2)) a_elems.push_back(n);
    std::vector<int> b_elems;
    for (int m = 0; m <= horizon; m += static_cast<int>(g) + 1)
      b_elems.push_back(std::min(horizon, m + static_cast<int>(rng.below(g + 1))));
    for (int n = 0; n <= horizon; ++n)
      if (rng.coin(0.15)) b_elems.push_back(n);
    ReturnSet a = ReturnSet::of(horizon, std::move(a_elems), ReturnSet::Exactness::Exact);
    ReturnSet b = ReturnSet::of(horizon, std::move(b_elems), ReturnSet::Exactness::Exact);
    if (!member(FamilySpec::thick(g), a).holds || !member(FamilySpec::syndetic(g), b).holds)
      continue;  // construction noise; only constructed-positive pairs count
    std::vector<int> inter;
    std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                          std::back_inserter(inter));
    res.tally(!inter.empty(), "thick/syndetic overlap case " + std::to_string(i));

    // Cofinite against large sets.
    long long t = 1 + rng.below(horizon / 2);
    ReturnSet tail = ReturnSet::of(horizon, [&] {
      std::vector<int> e;
      for (long long n = t; n <= horizon; ++n) e.push_back(static_cast<int>(n));
      return e;
    }(), ReturnSet::Exactness::Exact);
    if (static_cast<long long>(b.count()) > t) {
      std::vector<int> inter2;
      std::set_intersection(tail.elems.begin(), tail.elems.end(), b.elems.begin(), b.elems.end(),
                            std::back_inserter(inter2));
      res.tally(!inter2.empty(), "cofinite overlap case " + std::to_string(i));
    }
    // Cofinite(t) within the window implies at least H - t elements.
    res.tally(member(FamilySpec::infinite(horizon - t), tail).holds,
              "cofinite-to-infinite case " + std::to_string(i));
  }

  // Block witness checks: full windows absorb everything; translated blocks
  // are found; missing translates are rejected.
  {
    ReturnSet full = ReturnSet::of(20, [&] {
      std::vector<int> e;
      for (int n = 0; n <= 20; ++n) e.push_back(n);
      return e;
    }(), ReturnSet::Exactness::Exact);
    ReturnSet a = ReturnSet::of(20, {0, 1, 2}, ReturnSet::Exactness::Exact);
    auto r1 = block_witness_check(a, full, {{0, 1, 2}});
    res.tally(r1.holds && r1.translations == std::vector<long long>{0}, "block full window");
    ReturnSet b = ReturnSet::of(20, {10, 11, 12}, ReturnSet::Exactness::Exact);
    auto r2 = block_witness_check(a, b, {{0, 1, 2}});
    res.tally(r2.holds && r2.translations == std::vector<long long>{10}, "block translate");
    ReturnSet c = ReturnSet::of(20, {10, 12}, ReturnSet::Exactness::Exact);
    res.tally(!block_witness_check(a, c, {{0, 1, 2}}).holds, "block missing translate");
  }
  return res;
}

SuiteResult witness_transfers(uint64_t seed, int projections, int lifts, int recurrences,
                              int periodics) {
  SuiteResult res{"witness_transfers"};
  RandomSource rng(seed);
  for (int i = 0; i < projections; ++i) {
    auto inst = gen_transitivity_instance(rng);
    try {
      auto w = project_transitivity_witness(inst.sys.space(), inst.sys, inst.source_center,
                                            inst.target_center, inst.eps, inst.n, inst.witness);
      bool ok = true;
      for (const auto& [k, v] : w.validation) ok &= v < inst.eps;
      res.tally(ok, "projection case " + std::to_string(i));
    } catch (const std::exception& e) {
      res.tally(false, "projection case " + std::to_string(i) + ": " + e.what());
    }
  }
  for (int i = 0; i < lifts; ++i) {
    auto inst = gen_lift_instance(rng);
    try {
      auto w = lift_transitivity_witness(inst.sys.space(), inst.sys, inst.source, inst.target,
                                         inst.eps, inst.n, inst.level_witnesses);
      bool ok = true;
      for (const auto& [k, v] : w.validation) ok &= v < inst.eps;
      // Sup-metric balls are the tightest: the same witness must sit inside
      // the matching balls of every weaker metric.
      const auto& lifted = std::get<StepFuzzySet>(w.object);
      Space sp = inst.sys.space();
      auto img = zadeh_iterate(inst.sys, lifted, inst.n);
      for (auto m : {FuzzyMetricKind::Skorokhod, FuzzyMetricKind::Sendo, FuzzyMetricKind::Endo}) {
        ok &= fuzzy_metric_eval(m, sp, inst.source, lifted) < inst.eps;
        ok &= fuzzy_metric_eval(m, sp, inst.target, img) < inst.eps;
      }
      res.tally(ok, "lift case " + std::to_string(i));
    } catch (const std::exception& e) {
      res.tally(false, "lift case " + std::to_string(i) + ": " + e.what());
    }
  }
  for (int i = 0; i < recurrences; ++i) {
    auto inst = gen_recurrence_instance(rng);
    try {
      auto w = project_recurrence_witness(inst.sys.space(), inst.sys, inst.center, inst.eps,
                                          inst.n, inst.ell, inst.witness);
      bool ok = true;
      for (const auto& [k, v] : w.validation) ok &= v < inst.eps;
      res.tally(ok, "recurrence case " + std::to_string(i));
    } catch (const std::exception& e) {
      res.tally(false, "recurrence case " + std::to_string(i) + ": " + e.what());
    }
  }
  for (int i = 0; i < periodics; ++i) {
    auto inst = gen_periodic_instance(rng);
    try {
      auto w = project_periodic(inst.sys.space(), inst.sys, inst.center, inst.eps, inst.witness,
                                inst.period);
      res.tally(w.exact_periodicity, "periodic case " + std::to_string(i));
    } catch (const std::exception& e) {
      res.tally(false, "periodic case " + std::to_string(i) + ": " + e.what());
    }
  }
  return res;
}

SuiteResult hyper_roundtrip(uint64_t seed, int cases) {
  SuiteResult res{"hyper_roundtrip"};
  RandomSource rng(seed);
  for (int i = 0; i < cases; ++i) {
    auto inst = gen_lift_instance(rng);
    try {
      Space sp = inst.sys.space();
      auto lifted = lift_transitivity_witness(sp, inst.sys, inst.source, inst.target, inst.eps,
                                              inst.n, inst.level_witnesses);
      const auto& w = std::get<StepFuzzySet>(lifted.object);
      // The lifted fuzzy witness certifies the endograph balls as well, so it
      // must project back to a compact witness for the cut centers.
      CompactSet k = inst.source.top();
      CompactSet l = alpha_level(inst.target, Rational(1));
      double d1 = d_endo(sp, from_characteristic(k), w);
      double d2 = d_endo(sp, from_characteristic(l), zadeh_iterate(inst.sys, w, inst.n));
      double eps = std::max(d1, d2) + 0.01;
      if (eps > 0.5) {
        res.tally(true, "");  // outside the projection range; nothing to check
        continue;
      }
      auto back = project_transitivity_witness(sp, inst.sys, k, l, eps, inst.n, w);
      bool ok = true;
      for (const auto& [key, v] : back.validation) ok &= v < eps;
      res.tally(ok, "roundtrip case " + std::to_string(i));
    } catch (const std::exception& e) {
      res.tally(false, "roundtrip case " + std::to_string(i) + ": " + e.what());
    }
  }
  return res;
}

SuiteResult specification_suite(uint64_t seed, int builds, int projections) {
  SuiteResult res{"specification"};
  RandomSource rng(seed);
  System shift = System::full_shift(2);
  for (int i = 0; i < builds; ++i) {
    auto inst = gen_spec_instance(rng, 2);
    try {
      Point x = build_spec_witness(shift, inst);
      res.tally(verify_specification(shift, x, inst), "build case " + std::to_string(i));
    } catch (const std::exception& e) {
      res.tally(false, "build case " + std::to_string(i) + ": " + e.what());
    }
  }
  for (int i = 0; i < projections; ++i) {
    auto inst = gen_fuzzy_spec_instance(rng);
    try {
      auto w = project_spec_witness(inst.sys.space(), inst.sys, inst.witness, inst.inst);
      res.tally(w.exact_periodicity, "projection case " + std::to_string(i));
    } catch (const std::exception& e) {
      res.tally(false, "projection case " + std::to_string(i) + ": " + e.what());
    }
  }
  return res;
}

SuiteResult shift_verdicts(int horizon) {
  SuiteResult res{"shift_verdicts"};
  System sys = System::full_shift(2);
  auto balls = lift_basis(sys, basis(sys, 4), BallSpec::Level::Base, FuzzyMetricKind::Endo);

  auto run_family = [&](const FamilySpec& fam, bool expect_hold) {
    auto rep = check_A_transitive(sys, balls, fam, horizon);
    std::string first_bad;
    for (const auto& e : rep.entries)
      if (!e.verdict.holds) {
        first_bad = e.pair_name;
        break;
      }
    res.tally(rep.holds == expect_hold,
              fam.str() + (rep.holds ? " held" : " failed at " + first_bad));
  };
  run_family(FamilySpec::cofinite(4), true);
  run_family(FamilySpec::thick(8), true);
  run_family(FamilySpec::syndetic(1), true);
  run_family(FamilySpec::ap(8), true);
  run_family(FamilySpec::upper_banach(0.5), true);

  auto dev = check_devaney(sys, balls, horizon);
  res.tally(dev.holds, "devaney verdict");

  // Exactness of the cylinder combinatorics against plain word enumeration.
  auto short_balls = lift_basis(sys, basis(sys, 3), BallSpec::Level::Base, FuzzyMetricKind::Endo);
  Space sp = sys.space();
  bool enum_ok = true;
  std::string enum_bad;
  for (const auto& ubs : short_balls) {
    for (const auto& vbs : short_balls) {
      auto rs = return_set(sys, ubs, vbs, 12);
      const auto& uw = std::get<CylinderBall>(ubs.base.rep).word;
      const auto& vw = std::get<CylinderBall>(vbs.base.rep).word;
      for (int n = 0; n <= 12; ++n) {
        size_t len = std::max(uw.size(), n + vw.size());
        bool found = false;
        for (uint64_t bits = 0; bits < (1ull << len) && !found; ++bits) {
          bool match = true;
          auto sym = [&](size_t i) { return static_cast<uint8_t>((bits >> i) & 1); };
          for (size_t i = 0; i < uw.size() && match; ++i) match = sym(i) == uw[i];
          for (size_t i = 0; i < vw.size() && match; ++i) match = sym(n + i) == vw[i];
          found = match;
        }
        if (found != rs.contains(n)) {
          enum_ok = false;
          enum_bad = ubs.name + "->" + vbs.name + " at n=" + std::to_string(n);
        }
      }
    }
  }
  res.tally(enum_ok, "cylinder return sets vs word enumeration: " + enum_bad);
  return res;
}

SuiteResult rotation_verdicts() {
  SuiteResult res{"rotation_verdicts"};
  System sys = System::golden_rotation(64);
  auto balls = lift_basis(sys, basis(sys, 8), BallSpec::Level::Base, FuzzyMetricKind::Endo);
  const int horizon = 512;

  auto syn = check_A_transitive(sys, balls, FamilySpec::syndetic(13), horizon);
  std::string first_bad;
  for (const auto& e : syn.entries)
    if (!e.verdict.holds) {
      first_bad = e.pair_name + " gap at " + std::to_string(e.verdict.certificate.a);
      break;
    }
  res.tally(syn.holds, "syndetic:13 transitivity " + (syn.holds ? std::string("held")
                                                                : "failed at " + first_bad));

  auto thick = check_A_transitive(sys, balls, FamilySpec::thick(8), horizon);
  res.tally(!thick.holds, "thick:8 transitivity unexpectedly held");
  return res;
}

std::vector<std::string> suite_names() {
  return {"metrics", "lemma_key", "zadeh", "families", "transfers", "specification"};
}

SuiteResult run_suite(const std::string& name, uint64_t seed) {
  SuiteResult agg{name};
  if (name == "metrics") {
    agg.merge(metric_chain(seed, 1000));
    agg.merge(characteristic_collapse(seed + 1, 500));
    agg.merge(skorokhod_oracle_agreement(seed + 2, 200, 64));
    agg.merge(graph_oracle_agreement(seed + 3, 200, 256));
    agg.merge(metric_axioms(seed + 4, 300));
    agg.merge(quantization_bound(seed + 5, 500));
    return agg;
  }
  if (name == "lemma_key") {
    agg.merge(cut_stability(seed, 1000));
    return agg;
  }
  if (name == "zadeh") {
    agg.merge(zadeh_commutation(seed, 500, 100));
    return agg;
  }
  if (name == "families") {
    agg.merge(family_predicates(seed, 200, 500, 200));
    return agg;
  }
  if (name == "transfers") {
    agg.merge(witness_transfers(seed, 200, 200, 200, 100));
    agg.merge(hyper_roundtrip(seed + 1, 100));
    return agg;
  }
  if (name == "specification") {
    agg.merge(specification_suite(seed, 100, 100));
    return agg;
  }
  throw usage_error("unknown suite: " + name);
}

}  // namespace fuzzydyn::suites
