#include "fuzzydyn/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fuzzydyn {

Space random_finite_space(int n, RandomSource& rng) {
  // Euclidean embedding in the unit square, scaled so the diameter stays
  // within 1; the triangle inequality is inherited.
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = rng.unit();
    ys[i] = rng.unit();
  }
  std::vector<double> dist(static_cast<size_t>(n) * n, 0.0);
  const double scale = std::sqrt(2.0);
  bool retry = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double d = std::hypot(xs[i] - xs[j], ys[i] - ys[j]) / scale;
      dist[static_cast<size_t>(i) * n + j] = d;
      if (i != j && d < 1e-6) retry = true;
    }
  if (retry) return random_finite_space(n, rng);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return Space::finite(std::move(labels), std::move(dist));
}

System random_finite_map(int n, RandomSource& rng) {
  Space sp = random_finite_space(n, rng);
  std::vector<int> table(n);
  for (int i = 0; i < n; ++i) table[i] = static_cast<int>(rng.below(n));
  return System::finite_map(std::move(sp), std::move(table));
}

System random_finite_permutation(int n, RandomSource& rng) {
  Space sp = random_finite_space(n, rng);
  std::vector<int> table(n);
  std::iota(table.begin(), table.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(table[i], table[rng.below(static_cast<uint64_t>(i) + 1)]);
  return System::finite_map(std::move(sp), std::move(table));
}

Point random_point_in(const Space& sp, RandomSource& rng) {
  if (sp.is_finite()) return Point::finite(static_cast<int>(rng.below(sp.finite_desc().size())));
  if (sp.is_shift()) {
    int k = sp.shift_desc().alphabet;
    ShiftWord prefix, cycle;
    size_t plen = rng.below(3);
    size_t clen = 1 + rng.below(3);
    for (size_t i = 0; i < plen; ++i) prefix.push_back(static_cast<uint8_t>(rng.below(k)));
    for (size_t i = 0; i < clen; ++i) cycle.push_back(static_cast<uint8_t>(rng.below(k)));
    return Point::shift(std::move(prefix), std::move(cycle));
  }
  if (sp.is_circle())
    return Point::circle(rng.next_u64() & circle_mask(sp.circle_desc().precision_bits));
  const auto& prod = sp.product_desc();
  std::vector<Point> comps;
  for (int i = 0; i < prod.copies; ++i) comps.push_back(random_point_in(*prod.base, rng));
  return Point::product(std::move(comps));
}

CompactSet random_compact(const Space& sp, int max_size, RandomSource& rng) {
  int want = 1 + static_cast<int>(rng.below(max_size));
  std::vector<Point> pts;
  for (int i = 0; i < want; ++i) pts.push_back(random_point_in(sp, rng));
  return CompactSet::of(std::move(pts));
}

StepFuzzySet gen_random_coarse(const Space& sp, int max_levels, int max_support,
                               RandomSource& rng) {
  static const long long dens[] = {2, 4, 8, 16};
  CompactSet base = random_compact(sp, max_support, rng);
  int nlevels = 1 + static_cast<int>(rng.below(max_levels));
  std::vector<Rational> levels;
  for (int i = 0; i + 1 < nlevels; ++i) {
    long long q = dens[rng.below(4)];
    levels.emplace_back(1 + static_cast<long long>(rng.below(q - 1)), q);
  }
  levels.emplace_back(1);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<std::pair<Rational, CompactSet>> pairs;
  std::vector<Point> cur = base.points();
  for (size_t j = 0; j < levels.size(); ++j) {
    if (j > 0)
      while (cur.size() > 1 && rng.coin(0.5)) cur.erase(cur.begin() + rng.below(cur.size()));
    pairs.emplace_back(levels[levels.size() - 1 - j], CompactSet::of(cur));
  }
  return from_max_combination(std::move(pairs));
}

ReturnSet random_return_set(int horizon, double density, RandomSource& rng) {
  std::vector<int> elems;
  for (int n = 0; n <= horizon; ++n)
    if (rng.coin(density)) elems.push_back(n);
  if (elems.empty()) elems.push_back(static_cast<int>(rng.below(horizon + 1)));
  return ReturnSet::of(horizon, std::move(elems), ReturnSet::Exactness::Exact);
}

// ---------------------------------------------------------------------------
// Witness-transfer instances
// ---------------------------------------------------------------------------

namespace {

System random_base_system(RandomSource& rng) {
  if (rng.coin(0.5)) return System::full_shift(2);
  return random_finite_map(6 + static_cast<int>(rng.below(5)), rng);
}

// A point close to the set: same leading symbols on shifts, a nearby label on
// finite spaces.
std::optional<Point> nearby_point(const Space& sp, const CompactSet& k, double within,
                                  RandomSource& rng) {
  if (sp.is_finite()) {
    std::vector<Point> cands;
    for (int i = 0; i < sp.finite_desc().size(); ++i) {
      Point p = Point::finite(i);
      double best = 2.0;
      for (const auto& c : k.points()) best = std::min(best, distance(sp, p, c));
      if (best < within) cands.push_back(p);
    }
    if (cands.empty()) return std::nullopt;
    return rng.pick(cands);
  }
  if (sp.is_shift()) {
    const auto& anchor = rng.pick(k.points()).as_shift();
    int keep = 1 + static_cast<int>(std::max(1.0, -std::log2(within)));
    ShiftWord prefix;
    for (int i = 0; i < keep; ++i) prefix.push_back(anchor.symbol(static_cast<size_t>(i)));
    ShiftWord cycle{static_cast<uint8_t>(rng.below(sp.shift_desc().alphabet))};
    return Point::shift(std::move(prefix), std::move(cycle));
  }
  return std::nullopt;
}

Rational junk_level(RandomSource& rng) {
  static const std::pair<long long, long long> choices[] = {{1, 5}, {1, 4}, {3, 10}, {2, 5}};
  auto [p, q] = choices[rng.below(4)];
  return Rational(p, q);
}

}  // namespace

TransitivityInstance gen_transitivity_instance(RandomSource& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    System sys = random_base_system(rng);
    Space sp = sys.space();
    CompactSet core = random_compact(sp, 4, rng);
    long long n = rng.below(6);
    Rational junk = junk_level(rng);

    std::vector<std::pair<Rational, CompactSet>> pairs{{Rational(1), core}};
    if (rng.coin(0.7)) {
      auto extra = core.points();
      extra.push_back(random_point_in(sp, rng));
      pairs.emplace_back(junk, CompactSet::of(std::move(extra)));
    }
    StepFuzzySet u = from_max_combination(std::move(pairs));

    CompactSet k = core;
    if (rng.coin(0.5)) {
      if (auto g = nearby_point(sp, core, 0.2, rng)) {
        auto pts = core.points();
        pts.push_back(*g);
        k = CompactSet::of(std::move(pts));
      }
    }
    CompactSet image = hyper_iterate(sys, core, n);
    CompactSet l = image;
    if (rng.coin(0.5)) {
      if (auto g = nearby_point(sp, image, 0.2, rng)) {
        auto pts = image.points();
        pts.push_back(*g);
        l = CompactSet::of(std::move(pts));
      }
    }

    double d1 = d_endo(sp, from_characteristic(k), u);
    double d2 = d_endo(sp, from_characteristic(l), zadeh_iterate(sys, u, n));
    double delta = std::max(d1, d2);
    if (delta >= 0.45) continue;
    double eps = delta + (0.5 - delta) * (0.2 + 0.7 * rng.unit());
    return {std::move(sys), std::move(k), std::move(l), n, std::move(u), eps};
  }
  throw contract_error("transitivity instance generation exhausted its attempts");
}

LiftInstance gen_lift_instance(RandomSource& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    System sys = rng.coin(0.7) ? random_finite_map(6 + static_cast<int>(rng.below(5)), rng)
                               : System::full_shift(2);
    Space sp = sys.space();
    StepFuzzySet u = gen_random_coarse(sp, 3, 5, rng);
    double eps = 0.15 + 0.3 * rng.unit();
    long long n = rng.below(5);

    auto q = quantize(sp, u, eps / 2.0);
    // One shared extra point near the top cut keeps the per-level witnesses
    // nested while staying inside the half-radius balls.
    std::optional<Point> extra;
    if (rng.coin(0.6)) extra = nearby_point(sp, u.top(), eps / 2.0, rng);
    std::vector<std::pair<Rational, CompactSet>> witnesses;
    bool ok = true;
    for (const auto& a : q.breakpoints) {
      auto pts = alpha_level(u, a).points();
      if (extra) pts.push_back(*extra);
      CompactSet kj = CompactSet::of(std::move(pts));
      if (!(hausdorff(sp, alpha_level(u, a), kj) < eps / 2.0)) {
        ok = false;
        break;
      }
      witnesses.emplace_back(a, std::move(kj));
    }
    if (!ok) continue;

    StepFuzzySet w = from_max_combination(witnesses);
    StepFuzzySet v = zadeh_iterate(sys, w, n);
    // Optionally nudge the target by one shared point near its top image.
    if (auto g = rng.coin(0.4) ? nearby_point(sp, v.top(), eps / 2.0, rng) : std::nullopt) {
      std::vector<std::pair<Rational, CompactSet>> vp;
      for (size_t j = 0; j < v.levels.size(); ++j) {
        auto pts = v.level_sets[j].points();
        pts.push_back(*g);
        vp.emplace_back(v.levels[j], CompactSet::of(std::move(pts)));
      }
      v = from_max_combination(std::move(vp));
    }
    // Confirm the per-level target condition before handing the instance out.
    bool pre_ok = true;
    for (const auto& [a, kj] : witnesses)
      if (!(hausdorff(sp, alpha_level(v, a), hyper_iterate(sys, kj, n)) < eps / 2.0)) {
        pre_ok = false;
        break;
      }
    if (!pre_ok) continue;
    return {std::move(sys), std::move(u), std::move(v), eps, n, std::move(witnesses)};
  }
  throw contract_error("lift instance generation exhausted its attempts");
}

RecurrenceInstance gen_recurrence_instance(RandomSource& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    System sys = rng.coin(0.5) ? System::full_shift(2)
                               : random_finite_permutation(6 + static_cast<int>(rng.below(5)), rng);
    Space sp = sys.space();
    int ell = 1 + static_cast<int>(rng.below(4));
    long long n;
    CompactSet core = [&] {
      if (sys.is_full_shift()) {
        // Pure-cycle points whose lengths divide n keep the core pointwise
        // fixed under every multiple of n.
        long long d = 1 + rng.below(3);
        n = d * (1 + rng.below(3));
        std::vector<Point> pts;
        int count = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < count; ++i) {
          ShiftWord w;
          for (long long j = 0; j < d; ++j) w.push_back(static_cast<uint8_t>(rng.below(2)));
          pts.push_back(Point::shift({}, std::move(w)));
        }
        return CompactSet::of(std::move(pts));
      }
      // Unions of full permutation cycles are invariant at every time.
      n = 1 + rng.below(6);
      const auto& fm = sys.finite_map_desc();
      std::vector<int> cyc(fm.table.size(), -1);
      int ncyc = 0;
      for (size_t i = 0; i < fm.table.size(); ++i) {
        if (cyc[i] >= 0) continue;
        size_t j = i;
        while (cyc[j] < 0) {
          cyc[j] = ncyc;
          j = static_cast<size_t>(fm.table[j]);
        }
        ++ncyc;
      }
      int pick = static_cast<int>(rng.below(ncyc));
      std::vector<Point> pts;
      for (size_t i = 0; i < cyc.size(); ++i)
        if (cyc[i] == pick) pts.push_back(Point::finite(static_cast<int>(i)));
      return CompactSet::of(std::move(pts));
    }();

    Rational junk = junk_level(rng);
    std::vector<std::pair<Rational, CompactSet>> pairs{{Rational(1), core}};
    if (rng.coin(0.7)) {
      auto extra = core.points();
      extra.push_back(random_point_in(sp, rng));
      pairs.emplace_back(junk, CompactSet::of(std::move(extra)));
    }
    StepFuzzySet u = from_max_combination(std::move(pairs));

    CompactSet k = core;
    double delta = 0.0;
    StepFuzzySet cur = u;
    bool ok = true;
    for (int j = 0; j <= ell && ok; ++j) {
      double d = d_endo(sp, from_characteristic(k), cur);
      delta = std::max(delta, d);
      ok = delta < 0.45;
      if (j < ell) cur = zadeh_iterate(sys, cur, n);
    }
    if (!ok) continue;
    double eps = delta + (0.5 - delta) * (0.2 + 0.7 * rng.unit());
    return {std::move(sys), std::move(k), eps, n, ell, std::move(u)};
  }
  throw contract_error("recurrence instance generation exhausted its attempts");
}

PeriodicInstance gen_periodic_instance(RandomSource& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    long long p = 1 + rng.below(6);
    System sys = rng.coin(0.5) ? System::full_shift(2)
                               : random_finite_permutation(6 + static_cast<int>(rng.below(5)), rng);
    Space sp = sys.space();

    // Level sets built from whole orbits of the p-th iterate are exactly
    // invariant under it.
    std::vector<CompactSet> orbit_pool;
    if (sys.is_full_shift()) {
      int count = 2 + static_cast<int>(rng.below(3));
      for (int i = 0; i < count; ++i) {
        long long d = 1 + rng.below(3);
        if (p % d != 0) d = 1;
        ShiftWord w;
        for (long long j = 0; j < d; ++j) w.push_back(static_cast<uint8_t>(rng.below(2)));
        orbit_pool.push_back(CompactSet::of({Point::shift({}, std::move(w))}));
      }
    } else {
      const auto& fm = sys.finite_map_desc();
      std::vector<char> used(fm.table.size(), 0);
      for (size_t i = 0; i < fm.table.size(); ++i) {
        if (used[i]) continue;
        std::vector<Point> orb;
        size_t j = i;
        while (!used[j]) {
          used[j] = 1;
          orb.push_back(Point::finite(static_cast<int>(j)));
          j = static_cast<size_t>(iterate(sys, Point::finite(static_cast<int>(j)), p).as_finite().index);
        }
        orbit_pool.push_back(CompactSet::of(std::move(orb)));
      }
    }
    if (orbit_pool.empty()) continue;

    Rational low = junk_level(rng);
    std::vector<Point> top_pts = rng.pick(orbit_pool).points();
    std::vector<Point> all_pts = top_pts;
    if (orbit_pool.size() > 1 && rng.coin(0.7)) {
      auto more = rng.pick(orbit_pool).points();
      all_pts.insert(all_pts.end(), more.begin(), more.end());
    }
    std::vector<std::pair<Rational, CompactSet>> pairs{{Rational(1), CompactSet::of(top_pts)},
                                                       {low, CompactSet::of(all_pts)}};
    StepFuzzySet u = from_max_combination(std::move(pairs));
    if (!(zadeh_iterate(sys, u, p) == u)) continue;

    CompactSet k = u.top();
    double delta = d_endo(sp, from_characteristic(k), u);
    if (delta >= 0.45) continue;
    double eps = delta + (0.5 - delta) * (0.2 + 0.7 * rng.unit());
    return {std::move(sys), std::move(k), eps, std::move(u), p};
  }
  throw contract_error("periodic instance generation exhausted its attempts");
}

SpecInstance gen_spec_instance(RandomSource& rng, int alphabet) {
  SpecInstance inst;
  int m = rng.coin(0.5) ? 2 : 4;
  inst.eps = std::ldexp(1.0, -m);
  inst.n_eps = m + 1 + static_cast<long long>(rng.below(4));
  int s = 2 + static_cast<int>(rng.below(3));
  long long i = 0;
  for (int r = 0; r < s; ++r) {
    long long j = i + static_cast<long long>(rng.below(4));
    inst.intervals.emplace_back(i, j);
    ShiftWord prefix, cycle;
    size_t plen = rng.below(4);
    size_t clen = 1 + rng.below(3);
    for (size_t t = 0; t < plen; ++t) prefix.push_back(static_cast<uint8_t>(rng.below(alphabet)));
    for (size_t t = 0; t < clen; ++t) cycle.push_back(static_cast<uint8_t>(rng.below(alphabet)));
    inst.targets.push_back(Point::shift(std::move(prefix), std::move(cycle)));
    i = j + inst.n_eps + static_cast<long long>(rng.below(4));
  }
  return inst;
}

FuzzySpecInstance gen_fuzzy_spec_instance(RandomSource& rng) {
  System sys = System::full_shift(2);
  SpecInstance shape = gen_spec_instance(rng, 2);
  int m = static_cast<int>(std::lround(-std::log2(shape.eps)));
  long long period = shape.n_eps + shape.intervals.back().second;

  CompactSpecInstance inst;
  inst.eps = shape.eps;
  inst.n_eps = shape.n_eps;
  inst.intervals = shape.intervals;
  size_t max_size = 0;
  for (size_t r = 0; r < shape.targets.size(); ++r) {
    std::vector<Point> pts{shape.targets[r]};
    if (rng.coin(0.5)) {
      ShiftWord prefix, cycle{static_cast<uint8_t>(rng.below(2))};
      for (size_t t = 0; t < 2; ++t) prefix.push_back(static_cast<uint8_t>(rng.below(2)));
      pts.push_back(Point::shift(std::move(prefix), std::move(cycle)));
    }
    inst.targets.push_back(CompactSet::of(std::move(pts)));
    max_size = std::max(max_size, inst.targets.back().size());
  }

  // One periodic shadowing point per column of target points; together they
  // cover every target point of every segment.
  std::vector<Point> core;
  for (size_t qi = 0; qi < max_size; ++qi) {
    SpecInstance per_point = shape;
    per_point.targets.clear();
    for (const auto& kr : inst.targets)
      per_point.targets.push_back(kr.points()[qi % kr.size()]);
    core.push_back(build_spec_witness(sys, per_point));
  }

  std::vector<std::pair<Rational, CompactSet>> pairs{{Rational(1), CompactSet::of(core)}};
  if (rng.coin(0.6)) {
    // Junk points must stay exactly periodic too: cycles dividing the period.
    long long d = 1;
    for (long long c : {2, 3, 4})
      if (period % c == 0) d = c;
    ShiftWord w;
    for (long long t = 0; t < d; ++t) w.push_back(static_cast<uint8_t>(rng.below(2)));
    auto all = core;
    all.push_back(Point::shift({}, std::move(w)));
    Rational junk = m == 2 ? Rational(1, 5) : Rational(1, 32);
    pairs.emplace_back(junk, CompactSet::of(std::move(all)));
  }
  return {std::move(sys), std::move(inst), from_max_combination(std::move(pairs))};
}

StabilityInstance gen_stability_instance(RandomSource& rng) {
  for (int attempt = 0; attempt < 128; ++attempt) {
    Space sp = random_finite_space(12, rng);
    StepFuzzySet u = gen_random_coarse(sp, 4, 6, rng);
    // Anchor near a high cut so the endograph gap stays below 1/2.
    Rational anchor = u.levels[rng.below(u.levels.size())];
    CompactSet k = alpha_level(u, anchor);
    if (rng.coin(0.5)) {
      if (auto g = nearby_point(sp, k, 0.2, rng)) {
        auto pts = k.points();
        pts.push_back(*g);
        k = CompactSet::of(std::move(pts));
      }
    }
    double delta = d_endo(sp, from_characteristic(k), u);
    if (delta < 0.5) return {std::move(sp), std::move(k), std::move(u)};
  }
  throw contract_error("stability instance generation exhausted its attempts");
}

}  // namespace fuzzydyn
