#include <algorithm>
#include <cmath>
#include <map>

#include "fuzzydyn/analysis.hpp"

namespace fuzzydyn {

std::string fuzzy_metric_name(FuzzyMetricKind m) {
  switch (m) {
    case FuzzyMetricKind::Inf: return "d_inf";
    case FuzzyMetricKind::Skorokhod: return "d_skorokhod";
    case FuzzyMetricKind::Sendo: return "d_sendo";
    default: return "d_endo";
  }
}

FuzzyMetricKind fuzzy_metric_parse(const std::string& name) {
  if (name == "d_inf" || name == "inf") return FuzzyMetricKind::Inf;
  if (name == "d_skorokhod" || name == "skorokhod" || name == "d0")
    return FuzzyMetricKind::Skorokhod;
  if (name == "d_sendo" || name == "sendo") return FuzzyMetricKind::Sendo;
  if (name == "d_endo" || name == "endo") return FuzzyMetricKind::Endo;
  throw usage_error("unknown fuzzy metric: " + name);
}

double fuzzy_metric_eval(FuzzyMetricKind m, const Space& sp, const StepFuzzySet& u,
                         const StepFuzzySet& v) {
  switch (m) {
    case FuzzyMetricKind::Inf: return d_inf(sp, u, v);
    case FuzzyMetricKind::Skorokhod: return d_skorokhod(sp, u, v).first;
    case FuzzyMetricKind::Sendo: return d_sendo(sp, u, v);
    default: return d_endo(sp, u, v);
  }
}

BallSpec BallSpec::base_ball(std::string name, BaseBall ball) {
  BallSpec b;
  b.level = Level::Base;
  b.name = std::move(name);
  b.base = std::move(ball);
  return b;
}

BallSpec BallSpec::hyper_ball(std::string name, CompactSet center, double radius) {
  if (radius <= 0.0) throw usage_error("ball radius must be positive");
  BallSpec b;
  b.level = Level::Hyper;
  b.name = std::move(name);
  b.hyper_center = std::move(center);
  b.radius = radius;
  return b;
}

BallSpec BallSpec::fuzzy_ball(std::string name, StepFuzzySet center, double radius,
                              FuzzyMetricKind metric) {
  if (radius <= 0.0) throw usage_error("ball radius must be positive");
  BallSpec b;
  b.level = Level::Fuzzy;
  b.name = std::move(name);
  b.fuzzy_center = std::move(center);
  b.radius = radius;
  b.metric = metric;
  return b;
}

std::string SearchBudget::str() const {
  return "samples_per_ball=" + std::to_string(samples_per_ball) +
         " hyper_subset_budget=" + std::to_string(hyper_subset_budget) +
         " fuzzy_candidate_budget=" + std::to_string(fuzzy_candidate_budget) +
         " level_grid=" + std::to_string(level_grid);
}

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

namespace {

// Deterministic point sample of a base-level ball, every sample verified to be
// a member.
std::vector<Point> sample_base_ball(const Space& sp, const BaseBall& ball, int samples) {
  std::vector<Point> out;
  if (std::holds_alternative<CylinderBall>(ball.rep)) {
    const auto& w = std::get<CylinderBall>(ball.rep).word;
    int k = sp.shift_desc().alphabet;
    out.push_back(Point::shift({}, w));
    // A couple of tails beyond the constrained block.
    for (int c = 0; c < k; ++c)
      out.push_back(Point::shift(w, {static_cast<uint8_t>(c)}));
    out.push_back(Point::shift(w, {0, 1}));
  } else if (std::holds_alternative<MetricBall>(ball.rep)) {
    const auto& mb = std::get<MetricBall>(ball.rep);
    if (sp.is_circle()) {
      int bits = sp.circle_desc().precision_bits;
      uint64_t c = mb.center.as_circle().num;
      for (int i = 0; i < samples; ++i) {
        double off = mb.radius * (2.0 * (i + 0.5) / samples - 1.0);
        auto delta = static_cast<int64_t>(std::llround(std::ldexp(off, bits)));
        out.push_back(Point::circle((c + static_cast<uint64_t>(delta)) & circle_mask(bits)));
      }
    } else if (sp.is_finite()) {
      for (int i = 0; i < sp.finite_desc().size(); ++i) out.push_back(Point::finite(i));
    } else {
      out.push_back(mb.center);
    }
  } else {
    const auto& pb = *std::get<std::shared_ptr<ProductBall>>(ball.rep);
    const auto& base = *sp.product_desc().base;
    // Componentwise samples, crossed with a cap.
    std::vector<std::vector<Point>> comps;
    int per = std::max(2, static_cast<int>(std::pow(samples, 1.0 / pb.comps.size())));
    for (const auto& c : pb.comps) comps.push_back(sample_base_ball(base, c, per));
    std::vector<std::vector<Point>> tuples{{}};
    for (const auto& cs : comps) {
      std::vector<std::vector<Point>> next;
      for (const auto& t : tuples)
        for (const auto& p : cs) {
          if (static_cast<int>(next.size()) > samples * 4) break;
          auto e = t;
          e.push_back(p);
          next.push_back(std::move(e));
        }
      tuples = std::move(next);
    }
    for (auto& t : tuples) out.push_back(Point::product(std::move(t)));
  }
  std::vector<Point> verified;
  for (auto& p : out)
    if (ball_contains(sp, ball, p)) verified.push_back(std::move(p));
  return verified;
}

// Space-wide grid used when assembling compact / fuzzy candidates.
std::vector<Point> space_grid(const Space& sp, int density) {
  std::vector<Point> out;
  if (sp.is_finite()) {
    for (int i = 0; i < sp.finite_desc().size(); ++i) out.push_back(Point::finite(i));
  } else if (sp.is_shift()) {
    int k = sp.shift_desc().alphabet;
    std::vector<ShiftWord> words{{}};
    for (int len = 1; len <= 3; ++len) {
      std::vector<ShiftWord> next;
      for (const auto& w : words)
        for (int c = 0; c < k; ++c) {
          ShiftWord e = w;
          e.push_back(static_cast<uint8_t>(c));
          out.push_back(Point::shift({}, e));
          next.push_back(std::move(e));
        }
      words = std::move(next);
    }
  } else if (sp.is_circle()) {
    int bits = sp.circle_desc().precision_bits;
    for (int i = 0; i < density; ++i) {
      unsigned __int128 num = (static_cast<unsigned __int128>(1) << bits) * i / density;
      out.push_back(Point::circle(static_cast<uint64_t>(num)));
    }
  } else {
    const auto& prod = sp.product_desc();
    auto base_pts = space_grid(*prod.base, density);
    std::vector<std::vector<Point>> tuples{{}};
    for (int c = 0; c < prod.copies; ++c) {
      std::vector<std::vector<Point>> next;
      for (const auto& t : tuples)
        for (const auto& p : base_pts) {
          auto e = t;
          e.push_back(p);
          next.push_back(std::move(e));
        }
      tuples = std::move(next);
    }
    for (auto& t : tuples) out.push_back(Point::product(std::move(t)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CompactSet> sample_hyper_ball(const Space& sp, const CompactSet& center, double radius,
                                          const SearchBudget& budget) {
  std::vector<CompactSet> cands{center};
  auto grid = space_grid(sp, 16);
  std::vector<Point> near;
  for (const auto& g : grid) {
    double best = radius;
    for (const auto& c : center.points()) best = std::min(best, distance(sp, g, c));
    if (best < radius) near.push_back(g);
  }
  auto try_add = [&](std::vector<Point> pts) {
    if (static_cast<int>(cands.size()) >= budget.hyper_subset_budget) return;
    auto set = CompactSet::of(std::move(pts));
    if (hausdorff(sp, set, center) < radius) cands.push_back(std::move(set));
  };
  // Center grown by one or two nearby grid points.
  for (size_t i = 0; i < near.size(); ++i) {
    auto pts = center.points();
    pts.push_back(near[i]);
    try_add(std::move(pts));
  }
  for (size_t i = 0; i < near.size(); ++i)
    for (size_t j = i + 1; j < near.size(); ++j) {
      auto pts = center.points();
      pts.push_back(near[i]);
      pts.push_back(near[j]);
      try_add(std::move(pts));
    }
  // Single points swapped to a nearby grid point.
  for (size_t ci = 0; ci < center.size(); ++ci)
    for (const auto& g : near) {
      auto pts = center.points();
      pts[ci] = g;
      try_add(std::move(pts));
    }
  return cands;
}

std::vector<StepFuzzySet> sample_fuzzy_ball(const Space& sp, const StepFuzzySet& center,
                                            double radius, FuzzyMetricKind metric,
                                            const SearchBudget& budget) {
  std::vector<StepFuzzySet> cands{center};
  auto within = [&](const StepFuzzySet& u) {
    return fuzzy_metric_eval(metric, sp, center, u) < radius;
  };
  // Characteristic candidates around the top cut and the support.
  for (const auto& base : {center.top(), center.support()}) {
    for (auto& k : sample_hyper_ball(sp, base, radius, budget)) {
      if (static_cast<int>(cands.size()) >= budget.fuzzy_candidate_budget) return cands;
      auto u = from_characteristic(k);
      if (within(u)) cands.push_back(std::move(u));
    }
  }
  // Two-level candidates: grid level over the support, top over the top cut.
  for (int q = 1; q < budget.level_grid; ++q) {
    if (static_cast<int>(cands.size()) >= budget.fuzzy_candidate_budget) break;
    Rational lev(q, budget.level_grid);
    std::vector<std::pair<Rational, CompactSet>> pairs{{lev, center.support()},
                                                       {Rational(1), center.top()}};
    auto u = from_max_combination(pairs);
    if (within(u)) cands.push_back(std::move(u));
  }
  return cands;
}

// ---------------------------------------------------------------------------
// Exact cylinder combinatorics
// ---------------------------------------------------------------------------

// Joint satisfiability of word constraints placed at offsets: consistent iff
// no two placements disagree on a shared position.
struct WordConstraints {
  std::map<long long, uint8_t> at;

  bool place(const ShiftWord& w, long long offset) {
    for (size_t i = 0; i < w.size(); ++i) {
      auto [it, inserted] = at.emplace(offset + static_cast<long long>(i), w[i]);
      if (!inserted && it->second != w[i]) return false;
    }
    return true;
  }
};

bool cylinders_jointly_satisfiable(const ShiftWord& u, const ShiftWord& v, long long n) {
  WordConstraints c;
  return c.place(u, 0) && c.place(v, n);
}

}  // namespace

// ---------------------------------------------------------------------------
// Return sets
// ---------------------------------------------------------------------------

ReturnSet return_set(const System& sys, const BallSpec& u, const BallSpec& v, int horizon,
                     const SearchBudget& budget) {
  if (horizon < 1) throw usage_error("horizon must be positive");
  if (u.level != v.level) throw usage_error("return set needs balls at the same level");
  const Space sp = sys.space();
  std::vector<int> hits;

  if (u.level == BallSpec::Level::Base) {
    const bool cyls = std::holds_alternative<CylinderBall>(u.base.rep) &&
                      std::holds_alternative<CylinderBall>(v.base.rep);
    if (sys.is_full_shift() && cyls) {
      const auto& uw = std::get<CylinderBall>(u.base.rep).word;
      const auto& vw = std::get<CylinderBall>(v.base.rep).word;
      for (int n = 0; n <= horizon; ++n)
        if (cylinders_jointly_satisfiable(uw, vw, n)) hits.push_back(n);
      return ReturnSet::of(horizon, std::move(hits), ReturnSet::Exactness::Exact);
    }
    if (sys.is_finite_map()) {
      std::vector<Point> cur;
      for (int i = 0; i < sp.finite_desc().size(); ++i) {
        Point p = Point::finite(i);
        if (ball_contains(sp, u.base, p)) cur.push_back(p);
      }
      for (int n = 0; n <= horizon; ++n) {
        for (const auto& p : cur)
          if (ball_contains(sp, v.base, p)) {
            hits.push_back(n);
            break;
          }
        for (auto& p : cur) p = step(sys, p);
      }
      return ReturnSet::of(horizon, std::move(hits), ReturnSet::Exactness::Exact);
    }
    // Witness search over a deterministic sample of U.
    auto samples = sample_base_ball(sp, u.base, budget.samples_per_ball);
    std::vector<Point> cur = samples;
    for (int n = 0; n <= horizon; ++n) {
      for (size_t i = 0; i < cur.size(); ++i)
        if (ball_contains(sp, v.base, cur[i])) {
          hits.push_back(n);
          break;
        }
      for (auto& p : cur) p = step(sys, p);
    }
    return ReturnSet::of(horizon, std::move(hits), ReturnSet::Exactness::SoundPositives);
  }

  if (u.level == BallSpec::Level::Hyper) {
    auto cands = sample_hyper_ball(sp, *u.hyper_center, u.radius, budget);
    for (int n = 0; n <= horizon; ++n) {
      for (const auto& c : cands)
        if (hausdorff(sp, hyper_iterate(sys, c, n), *v.hyper_center) < v.radius) {
          hits.push_back(n);
          break;
        }
    }
    return ReturnSet::of(horizon, std::move(hits), ReturnSet::Exactness::SoundPositives);
  }

  auto cands = sample_fuzzy_ball(sp, *u.fuzzy_center, u.radius, u.metric, budget);
  for (int n = 0; n <= horizon; ++n) {
    for (const auto& c : cands)
      if (fuzzy_metric_eval(v.metric, sp, zadeh_iterate(sys, c, n), *v.fuzzy_center) < v.radius) {
        hits.push_back(n);
        break;
      }
  }
  return ReturnSet::of(horizon, std::move(hits), ReturnSet::Exactness::SoundPositives);
}

ReturnSet point_return_set(const System& sys, const Point& x, const BallSpec& u, int horizon) {
  if (u.level != BallSpec::Level::Base) throw usage_error("point return sets are base level");
  const Space sp = sys.space();
  std::vector<int> hits;
  Point cur = x;
  for (int n = 0; n <= horizon; ++n) {
    if (ball_contains(sp, u.base, cur)) hits.push_back(n);
    cur = step(sys, cur);
  }
  return ReturnSet::of(horizon, std::move(hits), ReturnSet::Exactness::Exact);
}

ReturnSet ell_return_set(const System& sys, const BallSpec& u, int ell, int horizon,
                         const SearchBudget& budget) {
  if (ell < 1) throw usage_error("ell must be positive");
  const Space sp = sys.space();
  std::vector<int> hits;

  if (u.level == BallSpec::Level::Base && sys.is_full_shift() &&
      std::holds_alternative<CylinderBall>(u.base.rep)) {
    const auto& w = std::get<CylinderBall>(u.base.rep).word;
    for (int n = 0; n <= horizon; ++n) {
      WordConstraints c;
      bool ok = true;
      for (int j = 0; j <= ell && ok; ++j) ok = c.place(w, static_cast<long long>(j) * n);
      if (ok) hits.push_back(n);
    }
    return ReturnSet::of(horizon, std::move(hits), ReturnSet::Exactness::Exact);
  }

  if (u.level == BallSpec::Level::Base && sys.is_finite_map()) {
    std::vector<Point> members;
    for (int i = 0; i < sp.finite_desc().size(); ++i) {
      Point p = Point::finite(i);
      if (ball_contains(sp, u.base, p)) members.push_back(p);
    }
    for (int n = 0; n <= horizon; ++n) {
      bool found = false;
      for (const auto& p : members) {
        bool all = true;
        for (int j = 1; j <= ell && all; ++j)
          all = ball_contains(sp, u.base, iterate(sys, p, static_cast<long long>(j) * n));
        if (all) {
          found = true;
          break;
        }
      }
      if (found) hits.push_back(n);
    }
    return ReturnSet::of(horizon, std::move(hits), ReturnSet::Exactness::Exact);
  }

  if (u.level == BallSpec::Level::Base) {
    auto samples = sample_base_ball(sp, u.base, budget.samples_per_ball);
    for (int n = 0; n <= horizon; ++n) {
      bool found = false;
      for (const auto& p : samples) {
        bool all = true;
        for (int j = 1; j <= ell && all; ++j)
          all = ball_contains(sp, u.base, iterate(sys, p, static_cast<long long>(j) * n));
        if (all) {
          found = true;
          break;
        }
      }
      if (found) hits.push_back(n);
    }
    return ReturnSet::of(horizon, std::move(hits), ReturnSet::Exactness::SoundPositives);
  }

  if (u.level == BallSpec::Level::Hyper) {
    auto cands = sample_hyper_ball(sp, *u.hyper_center, u.radius, budget);
    for (int n = 0; n <= horizon; ++n) {
      bool found = false;
      for (const auto& c : cands) {
        bool all = true;
        for (int j = 1; j <= ell && all; ++j)
          all = hausdorff(sp, hyper_iterate(sys, c, static_cast<long long>(j) * n),
                          *u.hyper_center) < u.radius;
        if (all) {
          found = true;
          break;
        }
      }
      if (found) hits.push_back(n);
    }
    return ReturnSet::of(horizon, std::move(hits), ReturnSet::Exactness::SoundPositives);
  }

  auto cands = sample_fuzzy_ball(sp, *u.fuzzy_center, u.radius, u.metric, budget);
  for (int n = 0; n <= horizon; ++n) {
    bool found = false;
    for (const auto& c : cands) {
      bool all = true;
      for (int j = 1; j <= ell && all; ++j)
        all = fuzzy_metric_eval(u.metric, sp,
                                zadeh_iterate(sys, c, static_cast<long long>(j) * n),
                                *u.fuzzy_center) < u.radius;
      if (all) {
        found = true;
        break;
      }
    }
    if (found) hits.push_back(n);
  }
  return ReturnSet::of(horizon, std::move(hits), ReturnSet::Exactness::SoundPositives);
}

}  // namespace fuzzydyn
