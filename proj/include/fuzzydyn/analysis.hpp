#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fuzzydyn/dynamics.hpp"
#include "fuzzydyn/families.hpp"
#include "fuzzydyn/metrics.hpp"

namespace fuzzydyn {

// ---------------------------------------------------------------------------
// Balls at the three levels
// ---------------------------------------------------------------------------

enum class FuzzyMetricKind { Inf, Skorokhod, Sendo, Endo };

std::string fuzzy_metric_name(FuzzyMetricKind m);
FuzzyMetricKind fuzzy_metric_parse(const std::string& name);
double fuzzy_metric_eval(FuzzyMetricKind m, const Space& sp, const StepFuzzySet& u,
                         const StepFuzzySet& v);

struct BallSpec {
  enum class Level { Base, Hyper, Fuzzy };

  Level level = Level::Base;
  std::string name;

  // Base.
  BaseBall base;
  // Hyper.
  std::optional<CompactSet> hyper_center;
  // Fuzzy.
  std::optional<StepFuzzySet> fuzzy_center;
  FuzzyMetricKind metric = FuzzyMetricKind::Endo;
  // Hyper / fuzzy radius (base radius lives in the ball itself).
  double radius = 0.0;

  static BallSpec base_ball(std::string name, BaseBall ball);
  static BallSpec hyper_ball(std::string name, CompactSet center, double radius);
  static BallSpec fuzzy_ball(std::string name, StepFuzzySet center, double radius,
                             FuzzyMetricKind metric);
};

// Search budgets for the sound witness searches; every report records them so
// negative verdicts read as "not found within budget".
struct SearchBudget {
  int samples_per_ball = 192;     // circle arc sampling
  int hyper_subset_budget = 200;  // candidate compact sets per hyper ball
  int fuzzy_candidate_budget = 120;
  int level_grid = 4;  // fuzzy candidate levels drawn from {1/q..q/q}
  std::string str() const;
};

// ---------------------------------------------------------------------------
// Return sets
// ---------------------------------------------------------------------------

// Times n <= horizon at which the n-th image of U meets V. Exact on shift
// cylinders (joint word constraints) and finite maps (exhaustion); elsewhere a
// sound witness search over a deterministic sample of U, with every reported
// time carrying a verified witness.
ReturnSet return_set(const System& sys, const BallSpec& u, const BallSpec& v, int horizon,
                     const SearchBudget& budget = {});

// Exact orbit return times from x into a base-level ball.
ReturnSet point_return_set(const System& sys, const Point& x, const BallSpec& u, int horizon);

// Times n with a single verified point visiting U at 0, n, 2n, ..., ell*n.
ReturnSet ell_return_set(const System& sys, const BallSpec& u, int ell, int horizon,
                         const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

struct PairCheck {
  std::string pair_name;
  FamilyVerdict verdict;
  ReturnSet returns;
};

struct CheckReport {
  std::string check;
  bool holds = false;
  std::vector<PairCheck> entries;
  std::vector<std::string> notes;
  std::string budget;
};

// Lifts a base basis to ball specs at the requested level: compact / fuzzy
// balls around representative sets built from the basis centers (singletons
// plus a few two-point unions).
std::vector<BallSpec> lift_basis(const System& sys, const std::vector<BasisElement>& base,
                                 BallSpec::Level level, FuzzyMetricKind metric);

// Family verdicts for the return sets of every ordered basis pair.
CheckReport check_A_transitive(const System& sys, const std::vector<BallSpec>& basis,
                               const FamilySpec& fam, int horizon, const SearchBudget& budget = {},
                               int jobs = 1);

// Family verdicts for the ell-return set of every basis element.
CheckReport check_A_recurrent(const System& sys, const std::vector<BallSpec>& basis,
                              const FamilySpec& fam, int ell, int horizon,
                              const SearchBudget& budget = {}, int jobs = 1);

// Orbit of x meets every basis element.
CheckReport check_point_transitive(const System& sys, const Point& x,
                                   const std::vector<BallSpec>& basis, int horizon);

// Each sampled point revisits its own basis-resolution ball (at some n >= 1);
// with ap_length > 0 the visit times must contain an (ap_length+1)-term
// arithmetic progression.
CheckReport check_point_recurrent(const System& sys, const std::vector<Point>& sample,
                                  double ball_radius, int horizon, int ap_length = 0);

// Transitivity with non-empty return sets plus density of periodic points at
// the basis resolution. Exact for full shifts and finite maps.
CheckReport check_devaney(const System& sys, const std::vector<BallSpec>& basis, int horizon,
                          const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// Witness transfers between the base, hyperspace and fuzzy levels
// ---------------------------------------------------------------------------

struct TransferWitness {
  long long n = 0;
  std::variant<CompactSet, StepFuzzySet> object;
  std::optional<Rational> alpha_used;
  std::vector<std::pair<std::string, double>> validation;  // name -> measured distance
  bool exact_periodicity = false;
};

// From a fuzzy set u whose endograph gap to chi_K is below eps and whose n-th
// Zadeh image is endograph-close to chi_L, extracts a cut u_alpha that is a
// compact-level witness for the same ball pair. alpha is the midpoint of the
// admissible interval, snapped up to the nearest breakpoint inside it.
TransferWitness project_transitivity_witness(const Space& sp, const System& sys,
                                             const CompactSet& k, const CompactSet& l, double eps,
                                             long long n, const StepFuzzySet& u);

// From per-level compact witnesses K_j for the quantized breakpoints of u,
// assembles the max-combination w and validates it as a sup-metric witness.
TransferWitness lift_transitivity_witness(const Space& sp, const System& sys,
                                          const StepFuzzySet& u, const StepFuzzySet& v, double eps,
                                          long long n,
                                          const std::vector<std::pair<Rational, CompactSet>>&
                                              level_witnesses);

// Recurrence version: all Zadeh iterates at multiples j*n (j <= ell) must be
// endograph-close to chi_K; the returned cut visits the compact ball at every
// multiple.
TransferWitness project_recurrence_witness(const Space& sp, const System& sys, const CompactSet& k,
                                           double eps, long long n, int ell,
                                           const StepFuzzySet& u);

// Periodic version: u must be exactly periodic under the Zadeh extension with
// period p; the returned cut is exactly periodic for the hyperspace map.
TransferWitness project_periodic(const Space& sp, const System& sys, const CompactSet& k,
                                 double eps, const StepFuzzySet& u, long long p);

// Replaces each point of K by the periodic point repeating its first L+1
// symbols (eps = 2^-L); the result is within eps of K and periodic for the
// hyperspace shift.
CompactSet periodic_near(const System& sys, const CompactSet& k, double eps);

// ---------------------------------------------------------------------------
// Specification property
// ---------------------------------------------------------------------------

struct SpecInstance {
  std::vector<Point> targets;                         // y_1..y_s, s >= 2
  std::vector<std::pair<long long, long long>> intervals;  // 0 = i_1 <= j_1 < i_2 <= ...
  double eps = 0.25;                                  // 2^-m on shift spaces
  long long n_eps = 1;
};

void validate_instance(const SpecInstance& inst);

// Periodic point of period n_eps + j_s whose orbit eps-shadows each target
// over its interval; exact on the full shift by symbol construction.
Point build_spec_witness(const System& sys, const SpecInstance& inst);

bool verify_specification(const System& sys, const Point& x, const SpecInstance& inst);

struct CompactSpecInstance {
  std::vector<CompactSet> targets;
  std::vector<std::pair<long long, long long>> intervals;
  double eps = 0.25;
  long long n_eps = 1;
};

// Fuzzy-to-hyperspace specification transfer: v's Zadeh iterates must be
// endograph-close to the characteristic functions of the target images over
// each interval, and v exactly periodic; the chosen cut then shadows at the
// compact level and is exactly periodic.
TransferWitness project_spec_witness(const Space& sp, const System& sys, const StepFuzzySet& v,
                                     const CompactSpecInstance& inst);

}  // namespace fuzzydyn
