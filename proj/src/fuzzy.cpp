#include "fuzzydyn/fuzzy.hpp"

#include <algorithm>
#include <map>

#include "fuzzydyn/random.hpp"

namespace fuzzydyn {

void validate(const StepFuzzySet& u) {
  if (u.levels.empty() || u.levels.size() != u.level_sets.size())
    throw usage_error("step fuzzy set needs matching non-empty level and set lists");
  if (!(u.levels.back() == Rational(1))) throw usage_error("top level must be exactly 1");
  for (size_t j = 0; j < u.levels.size(); ++j) {
    if (!(u.levels[j] > Rational(0)) || u.levels[j] > Rational(1))
      throw usage_error("levels must lie in (0,1]");
    if (j > 0) {
      if (!(u.levels[j - 1] < u.levels[j])) throw usage_error("levels must be strictly ascending");
      if (u.level_sets[j - 1] == u.level_sets[j])
        throw usage_error("consecutive equal level sets must be merged");
      for (const auto& p : u.level_sets[j].points())
        if (!u.level_sets[j - 1].contains(p)) throw usage_error("level sets must be nested");
    }
  }
}

StepFuzzySet from_characteristic(const CompactSet& k) {
  return StepFuzzySet{{Rational(1)}, {k}};
}

namespace {

// Merges consecutive equal sets, keeping the higher level (whose membership
// already dominates the lower one).
StepFuzzySet canonicalize(std::vector<Rational> levels, std::vector<CompactSet> sets) {
  std::vector<Rational> out_l;
  std::vector<CompactSet> out_s;
  for (size_t j = 0; j < levels.size(); ++j) {
    if (!out_s.empty() && out_s.back() == sets[j]) {
      out_l.back() = levels[j];
    } else {
      out_l.push_back(levels[j]);
      out_s.push_back(std::move(sets[j]));
    }
  }
  StepFuzzySet u{std::move(out_l), std::move(out_s)};
  validate(u);
  return u;
}

}  // namespace

StepFuzzySet from_max_combination(std::vector<std::pair<Rational, CompactSet>> pairs) {
  if (pairs.empty()) throw usage_error("max combination needs at least one pair");
  bool has_top = false;
  for (const auto& [a, k] : pairs) {
    if (!(a > Rational(0)) || a > Rational(1)) throw usage_error("levels must lie in (0,1]");
    if (a == Rational(1)) has_top = true;
  }
  if (!has_top) throw usage_error("normality violation: no pair at level 1");

  std::map<Rational, std::vector<Point>> by_level;
  for (auto& [a, k] : pairs) {
    auto& dst = by_level[a];
    dst.insert(dst.end(), k.points().begin(), k.points().end());
  }
  // Cut at level a = union of the sets at levels >= a: accumulate suffix
  // unions from the top down.
  std::vector<Rational> levels;
  std::vector<CompactSet> sets;
  std::vector<Point> acc;
  for (auto it = by_level.rbegin(); it != by_level.rend(); ++it) {
    acc.insert(acc.end(), it->second.begin(), it->second.end());
    levels.push_back(it->first);
    sets.push_back(CompactSet::of(acc));
  }
  std::reverse(levels.begin(), levels.end());
  std::reverse(sets.begin(), sets.end());
  return canonicalize(std::move(levels), std::move(sets));
}

const CompactSet& alpha_level(const StepFuzzySet& u, const Rational& a) {
  if (a < Rational(0) || a > Rational(1)) throw usage_error("alpha outside [0,1]");
  if (a == Rational(0)) return u.support();
  auto it = std::lower_bound(u.levels.begin(), u.levels.end(), a);
  return u.level_sets[static_cast<size_t>(it - u.levels.begin())];
}

Rational membership(const StepFuzzySet& u, const Point& x) {
  for (size_t j = u.levels.size(); j-- > 0;)
    if (u.level_sets[j].contains(x)) return u.levels[j];
  return Rational(0);
}

QuantizationResult quantize(const Space& sp, const StepFuzzySet& u, double eps) {
  if (eps <= 0.0) throw usage_error("quantization bound must be positive");
  const size_t n = u.levels.size();
  // Keep the top level; walking down, drop a level whenever its set is within
  // eps of the lowest kept level above it.
  std::vector<size_t> kept{n - 1};
  for (size_t j = n - 1; j-- > 0;) {
    if (hausdorff(sp, u.level_sets[j], u.level_sets[kept.back()]) > eps) kept.push_back(j);
  }
  std::reverse(kept.begin(), kept.end());

  std::vector<Rational> levels;
  std::vector<CompactSet> sets;
  double achieved = 0.0;
  size_t ki = 0;
  for (size_t j = 0; j < n; ++j) {
    if (ki < kept.size() && kept[ki] == j) {
      levels.push_back(u.levels[j]);
      sets.push_back(u.level_sets[j]);
      ++ki;
    } else {
      // The cut on this level's interval now resolves to the next kept set.
      achieved = std::max(achieved, hausdorff(sp, u.level_sets[j], u.level_sets[kept[ki]]));
    }
  }
  QuantizationResult res{StepFuzzySet{std::move(levels), std::move(sets)},
                         {},
                         achieved};
  res.breakpoints = res.quantized.levels;
  validate(res.quantized);
  return res;
}

namespace {

Point random_point(const Space& sp, RandomSource& rng) {
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
  for (int i = 0; i < prod.copies; ++i) comps.push_back(random_point(*prod.base, rng));
  return Point::product(std::move(comps));
}

}  // namespace

StepFuzzySet gen_random(const Space& sp, int max_levels, int max_support, uint64_t seed) {
  if (max_levels < 1 || max_support < 1) throw usage_error("generator bounds must be positive");
  RandomSource rng(seed);

  std::vector<Point> support;
  int want = 1 + static_cast<int>(rng.below(max_support));
  for (int i = 0; i < want * 3 && static_cast<int>(support.size()) < want; ++i)
    support.push_back(random_point(sp, rng));
  CompactSet base = CompactSet::of(support);

  int nlevels = 1 + static_cast<int>(rng.below(max_levels));
  // Ascending levels on a coarse rational grid, topped with 1.
  static const long long dens[] = {2, 3, 4, 5, 6, 8, 10, 12, 16};
  std::vector<Rational> levels;
  for (int i = 0; i + 1 < nlevels; ++i) {
    long long q = dens[rng.below(sizeof(dens) / sizeof(dens[0]))];
    long long p = 1 + static_cast<long long>(rng.below(q - 1));
    levels.emplace_back(p, q);
  }
  levels.emplace_back(1);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // Nested chain by trimming points going up, always keeping at least one.
  std::vector<CompactSet> sets;
  std::vector<Point> cur = base.points();
  for (size_t j = 0; j < levels.size(); ++j) {
    if (j > 0 && cur.size() > 1) {
      size_t drop = rng.below(cur.size());  // may be 0
      for (size_t d = 0; d < drop && cur.size() > 1; ++d) cur.erase(cur.begin() + rng.below(cur.size()));
    }
    sets.push_back(CompactSet::of(cur));
  }
  return canonicalize(std::move(levels), std::move(sets));
}

std::string fuzzy_str(const StepFuzzySet& u) {
  std::string s;
  for (size_t j = 0; j < u.levels.size(); ++j) {
    if (j) s += " ";
    s += u.levels[j].str() + ":" + compact_str(u.level_sets[j]);
  }
  return s;
}

}  // namespace fuzzydyn
