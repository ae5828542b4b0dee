#include <algorithm>
#include <cmath>
#include <thread>

#include "fuzzydyn/analysis.hpp"

namespace fuzzydyn {

namespace {

// Index-sharded fan-out over pure tasks; results land in pre-sized slots so
// the merge is deterministic regardless of scheduling.
template <typename Fn>
void parallel_for(size_t count, int jobs, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (size_t i = static_cast<size_t>(t); i < count; i += static_cast<size_t>(jobs)) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<BallSpec> lift_basis(const System& sys, const std::vector<BasisElement>& base,
                                 BallSpec::Level level, FuzzyMetricKind metric) {
  const Space sp = sys.space();
  std::vector<BallSpec> out;
  if (level == BallSpec::Level::Base) {
    for (const auto& e : base) out.push_back(BallSpec::base_ball(e.name, e.ball));
    return out;
  }
  // Compact representatives: singletons of the element centers, plus a few
  // two-point unions for non-singleton structure.
  std::vector<std::pair<std::string, CompactSet>> reps;
  for (const auto& e : base)
    reps.emplace_back(e.name, CompactSet::of({ball_representative(sp, e.ball)}));
  size_t singles = reps.size();
  for (size_t i = 0; i < singles && reps.size() < singles + 6; ++i)
    for (size_t j = i + 1; j < std::min(singles, i + 3) && reps.size() < singles + 6; ++j) {
      auto pts = reps[i].second.points();
      auto more = reps[j].second.points();
      pts.insert(pts.end(), more.begin(), more.end());
      reps.emplace_back(reps[i].first + "+" + reps[j].first, CompactSet::of(std::move(pts)));
    }
  for (size_t i = 0; i < reps.size(); ++i) {
    double r = i < singles ? ball_radius(sp, base[i].ball) : ball_radius(sp, base[0].ball);
    if (level == BallSpec::Level::Hyper) {
      out.push_back(BallSpec::hyper_ball("H(" + reps[i].first + ")", reps[i].second, r));
    } else {
      out.push_back(BallSpec::fuzzy_ball("F(" + reps[i].first + ")",
                                         from_characteristic(reps[i].second), r, metric));
    }
  }
  return out;
}

CheckReport check_A_transitive(const System& sys, const std::vector<BallSpec>& basis,
                               const FamilySpec& fam, int horizon, const SearchBudget& budget,
                               int jobs) {
  CheckReport rep;
  rep.check = "A_transitive(" + fam.str() + ")";
  rep.budget = budget.str();
  const size_t n = basis.size();
  rep.entries.resize(n * n);
  parallel_for(n * n, jobs, [&](size_t idx) {
    size_t i = idx / n, j = idx % n;
    PairCheck pc;
    pc.pair_name = basis[i].name + "->" + basis[j].name;
    pc.returns = return_set(sys, basis[i], basis[j], horizon, budget);
    pc.verdict = member(fam, pc.returns);
    rep.entries[idx] = std::move(pc);
  });
  rep.holds = std::all_of(rep.entries.begin(), rep.entries.end(),
                          [](const PairCheck& p) { return p.verdict.holds; });
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const PairCheck& a, const PairCheck& b) { return a.pair_name < b.pair_name; });
  rep.notes.push_back("conjunction over all ordered basis pairs");
  return rep;
}

CheckReport check_A_recurrent(const System& sys, const std::vector<BallSpec>& basis,
                              const FamilySpec& fam, int ell, int horizon,
                              const SearchBudget& budget, int jobs) {
  CheckReport rep;
  rep.check = "A_recurrent(" + fam.str() + ", ell=" + std::to_string(ell) + ")";
  rep.budget = budget.str();
  rep.entries.resize(basis.size());
  parallel_for(basis.size(), jobs, [&](size_t i) {
    PairCheck pc;
    pc.pair_name = basis[i].name;
    pc.returns = ell_return_set(sys, basis[i], ell, horizon, budget);
    pc.verdict = member(fam, pc.returns);
    rep.entries[i] = std::move(pc);
  });
  rep.holds = std::all_of(rep.entries.begin(), rep.entries.end(),
                          [](const PairCheck& p) { return p.verdict.holds; });
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const PairCheck& a, const PairCheck& b) { return a.pair_name < b.pair_name; });
  return rep;
}

CheckReport check_point_transitive(const System& sys, const Point& x,
                                   const std::vector<BallSpec>& basis, int horizon) {
  CheckReport rep;
  rep.check = "point_transitive";
  for (const auto& b : basis) {
    PairCheck pc;
    pc.pair_name = b.name;
    pc.returns = point_return_set(sys, x, b, horizon);
    pc.verdict.holds = !pc.returns.elems.empty();
    pc.verdict.certificate = {"count", static_cast<long long>(pc.returns.count()), 1, 0, 0.0};
    pc.verdict.truncation_note = "orbit scanned up to n=" + std::to_string(horizon);
    rep.entries.push_back(std::move(pc));
  }
  rep.holds = std::all_of(rep.entries.begin(), rep.entries.end(),
                          [](const PairCheck& p) { return p.verdict.holds; });
  rep.notes.push_back("start point " + point_str(x));
  return rep;
}

CheckReport check_point_recurrent(const System& sys, const std::vector<Point>& sample,
                                  double ball_radius, int horizon, int ap_length) {
  CheckReport rep;
  rep.check = ap_length > 0 ? "point_ap_recurrent(" + std::to_string(ap_length) + ")"
                            : "point_recurrent";
  const Space sp = sys.space();
  for (const auto& x : sample) {
    BallSpec ball = BallSpec::base_ball("ball(" + point_str(x) + ")",
                                        BaseBall{MetricBall{x, ball_radius}});
    if (sys.is_full_shift()) {
      // Resolution ball as a cylinder of the matching length.
      int len = std::max(1, static_cast<int>(std::lround(-std::log2(ball_radius))));
      ShiftWord w;
      for (int i = 0; i < len; ++i) w.push_back(x.as_shift().symbol(i));
      ball = BallSpec::base_ball("cyl(" + point_str(x) + ")", BaseBall{CylinderBall{w}});
    }
    PairCheck pc;
    pc.pair_name = ball.name;
    auto rs = point_return_set(sys, x, ball, horizon);
    // Recurrence looks at strictly positive times.
    std::vector<int> positive;
    for (int n : rs.elems)
      if (n >= 1) positive.push_back(n);
    pc.returns = ReturnSet::of(horizon, positive, rs.exactness);
    if (ap_length > 0) {
      pc.verdict = member(FamilySpec::ap(ap_length), pc.returns);
    } else {
      pc.verdict.holds = !pc.returns.elems.empty();
      pc.verdict.certificate = {"count", static_cast<long long>(pc.returns.count()), 1, 0, 0.0};
      pc.verdict.truncation_note = "revisits within n<=" + std::to_string(horizon);
    }
    rep.entries.push_back(std::move(pc));
  }
  rep.holds = std::all_of(rep.entries.begin(), rep.entries.end(),
                          [](const PairCheck& p) { return p.verdict.holds; });
  return rep;
}

namespace {

// Shortest period of p under the system map, or 0 if p is not periodic within
// the probe bound.
long long period_of(const System& sys, const Point& p, long long bound) {
  Point cur = step(sys, p);
  for (long long t = 1; t <= bound; ++t) {
    if (cur == p) return t;
    cur = step(sys, cur);
  }
  return 0;
}

}  // namespace

CheckReport check_devaney(const System& sys, const std::vector<BallSpec>& basis, int horizon,
                          const SearchBudget& budget) {
  CheckReport rep;
  rep.check = "devaney";
  rep.budget = budget.str();
  auto transitive = check_A_transitive(sys, basis, FamilySpec::infinite(1), horizon, budget, 1);
  rep.entries = transitive.entries;
  bool periodic_density = true;
  const Space sp = sys.space();
  for (const auto& b : basis) {
    if (b.level != BallSpec::Level::Base)
      throw usage_error("devaney check expects a base-level basis");
    PairCheck pc;
    pc.pair_name = "periodic:" + b.name;
    pc.returns = ReturnSet::of(1, {0}, ReturnSet::Exactness::Exact);
    bool found = false;
    std::string cert;
    if (sys.is_full_shift()) {
      // w^inf lies in the cylinder [w] and is periodic by construction.
      const auto& w = std::get<CylinderBall>(b.base.rep).word;
      Point p = Point::shift({}, w);
      found = ball_contains(sp, b.base, p);
      cert = point_str(p) + " period " + std::to_string(p.as_shift().cycle.size());
    } else if (sys.is_finite_map()) {
      for (int i = 0; i < sp.finite_desc().size() && !found; ++i) {
        Point p = Point::finite(i);
        if (!ball_contains(sp, b.base, p)) continue;
        long long per = period_of(sys, p, sp.finite_desc().size() + 1);
        if (per > 0) {
          found = true;
          cert = point_str(p) + " period " + std::to_string(per);
        }
      }
    } else {
      // Bounded orbit probe; absence of a find is reported, not proven.
      Point p = ball_representative(sp, b.base);
      long long per = period_of(sys, p, horizon);
      found = per > 0 && ball_contains(sp, b.base, p);
      cert = found ? point_str(p) + " period " + std::to_string(per) : "no periodic point found";
    }
    pc.verdict.holds = found;
    pc.verdict.certificate = {"periodic", 0, 0, 0, 0.0};
    pc.verdict.truncation_note = cert;
    periodic_density &= found;
    rep.entries.push_back(std::move(pc));
  }
  rep.holds = transitive.holds && periodic_density;
  rep.notes.push_back(transitive.holds ? "transitive at scale (all pairs met)"
                                       : "transitivity failed on some pair");
  rep.notes.push_back(periodic_density ? "periodic points meet every basis element"
                                       : "periodic density failed on some element");
  return rep;
}

}  // namespace fuzzydyn
