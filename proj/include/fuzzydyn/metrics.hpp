#pragma once

#include <utility>
#include <vector>

#include "fuzzydyn/fuzzy.hpp"

namespace fuzzydyn {

// Supremum metric: sup over alpha of the Hausdorff gap between cuts. Exact on
// step sets, evaluated on the merged breakpoint grid plus the supports.
double d_inf(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v);

// Witnessing relabeling for the Skorokhod metric: a strictly increasing map of
// v's breakpoints, fixing 1, with distortion and induced sup-gap both within
// epsilon.
struct SkorokhodAlignment {
  double epsilon = 0.0;
  std::vector<std::pair<Rational, double>> images;  // (level of v, image)
};

// Skorokhod metric: infimum over increasing relabelings of
// max(level distortion, sup-metric after relabeling). Exact on step sets:
// the optimum is attained at one of finitely many critical values, located by
// a monotone alignment feasibility program.
std::pair<double, SkorokhodAlignment> d_skorokhod(const Space& sp, const StepFuzzySet& u,
                                                  const StepFuzzySet& v);

// Endograph metric (Hausdorff gap between endographs under the max product
// metric). Closed form: per support column the supremum sits at the column
// top, and escaping to height zero caps the cost at the membership value.
double d_endo(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v);

// Sendograph metric: as d_endo but restricted to support columns, so without
// the height-zero escape.
double d_sendo(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v);

// Sampling oracles, independent of the closed forms: columns are discretized
// at `resolution` height steps and a plain finite Hausdorff distance is taken.
// Both converge to the true value within 1/resolution.
double endo_oracle(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v, int resolution);
double sendo_oracle(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v, int resolution);

// Brute-force Skorokhod oracle over monotone placements of v's breakpoints on
// an even grid with the top pinned at 1; within 2/grid of the exact value.
// Throws budget_error when the enumeration would explode.
double skorokhod_oracle(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v, int grid);

// Checks, for delta = d_endo(chi_K, u) < 1/2, that every representable cut in
// (delta, 1-delta] is within delta + tol of K in the Hausdorff metric.
// Returns false (with the first offending level in *bad_level) on failure.
bool level_stability_check(const Space& sp, const CompactSet& k, const StepFuzzySet& u,
                           double tol, double* delta_out, Rational* bad_level);

}  // namespace fuzzydyn
