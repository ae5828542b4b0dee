#pragma once

#include "fuzzydyn/analysis.hpp"
#include "fuzzydyn/random.hpp"

namespace fuzzydyn {

// Deterministic instance generators for the randomized verification suites.
// Each generator builds inputs that satisfy the contract of the operation it
// feeds (re-sampling internally until the measured gaps do), so suite failures
// point at the operation, not the data.

Space random_finite_space(int n, RandomSource& rng);
System random_finite_map(int n, RandomSource& rng);
System random_finite_permutation(int n, RandomSource& rng);

Point random_point_in(const Space& sp, RandomSource& rng);
CompactSet random_compact(const Space& sp, int max_size, RandomSource& rng);

// Step sets with levels restricted to denominators {2,4,8,16}; keeps the
// placement oracles within their grid error bounds.
StepFuzzySet gen_random_coarse(const Space& sp, int max_levels, int max_support,
                               RandomSource& rng);

ReturnSet random_return_set(int horizon, double density, RandomSource& rng);

struct TransitivityInstance {
  System sys;
  CompactSet source_center, target_center;
  long long n = 0;
  StepFuzzySet witness;
  double eps = 0.5;
};
TransitivityInstance gen_transitivity_instance(RandomSource& rng);

struct LiftInstance {
  System sys;
  StepFuzzySet source, target;
  double eps = 0.5;
  long long n = 0;
  std::vector<std::pair<Rational, CompactSet>> level_witnesses;
};
LiftInstance gen_lift_instance(RandomSource& rng);

struct RecurrenceInstance {
  System sys;
  CompactSet center;
  double eps = 0.5;
  long long n = 1;
  int ell = 1;
  StepFuzzySet witness;
};
RecurrenceInstance gen_recurrence_instance(RandomSource& rng);

struct PeriodicInstance {
  System sys;
  CompactSet center;
  double eps = 0.5;
  StepFuzzySet witness;
  long long period = 1;
};
PeriodicInstance gen_periodic_instance(RandomSource& rng);

SpecInstance gen_spec_instance(RandomSource& rng, int alphabet);

struct FuzzySpecInstance {
  System sys;
  CompactSpecInstance inst;
  StepFuzzySet witness;
};
FuzzySpecInstance gen_fuzzy_spec_instance(RandomSource& rng);

// (compact, fuzzy) pairs with an endograph gap strictly below 1/2, used by the
// cut-stability sweeps.
struct StabilityInstance {
  Space space;
  CompactSet center;
  StepFuzzySet set;
};
StabilityInstance gen_stability_instance(RandomSource& rng);

}  // namespace fuzzydyn
