#pragma once

#include <utility>
#include <vector>

#include "fuzzydyn/rational.hpp"
#include "fuzzydyn/space.hpp"

namespace fuzzydyn {

// Step normal fuzzy set u = max_j (level_j * chi_{set_j}).
//
// Invariants: levels strictly ascending in (0,1] with the last exactly 1,
// level sets nested (set_j contains set_{j+1}), all non-empty, and no two
// consecutive sets equal. The membership level of x is the largest level
// whose set contains x, so the alpha-cut at a in (level_{j-1}, level_j] is
// set_j, and the cut at 0 is the support set_1.
struct StepFuzzySet {
  std::vector<Rational> levels;
  std::vector<CompactSet> level_sets;

  size_t breakpoint_count() const { return levels.size(); }
  const CompactSet& support() const { return level_sets.front(); }
  const CompactSet& top() const { return level_sets.back(); }

  friend bool operator==(const StepFuzzySet& a, const StepFuzzySet& b) {
    return a.levels == b.levels && a.level_sets == b.level_sets;
  }
  friend bool operator!=(const StepFuzzySet& a, const StepFuzzySet& b) { return !(a == b); }
};

// Throws usage_error when the invariants above are broken.
void validate(const StepFuzzySet& u);

StepFuzzySet from_characteristic(const CompactSet& k);

// Builds the max-combination of (level, set) pairs. The cut at a equals the
// union of all sets whose level is >= a; the result is canonical.
// Requires some pair at level 1 (normality).
StepFuzzySet from_max_combination(std::vector<std::pair<Rational, CompactSet>> pairs);

// a must lie in [0,1]; a = 0 yields the support.
const CompactSet& alpha_level(const StepFuzzySet& u, const Rational& a);

// Largest level whose set contains x, zero when x is outside the support.
Rational membership(const StepFuzzySet& u, const Point& x);

struct QuantizationResult {
  StepFuzzySet quantized;
  std::vector<Rational> breakpoints;  // retained levels
  double achieved_bound = 0.0;        // exact sup-metric gap to the input
};

// Coarsens u to a subset of its own breakpoints (always keeping level 1) so
// the sup over alpha of the Hausdorff gap between cuts stays within eps.
// Greedy top-down: a level is dropped when its set is within eps of the
// nearest retained level above it.
QuantizationResult quantize(const Space& sp, const StepFuzzySet& u, double eps);

// Deterministic generator used by the randomized suites; output always
// satisfies the invariants.
StepFuzzySet gen_random(const Space& sp, int max_levels, int max_support, uint64_t seed);

std::string fuzzy_str(const StepFuzzySet& u);

}  // namespace fuzzydyn
