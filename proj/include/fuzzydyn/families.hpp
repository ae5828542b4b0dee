#pragma once

#include <string>
#include <vector>

#include "fuzzydyn/errors.hpp"

namespace fuzzydyn {

// Return times within an explicit horizon. A window verdict on a truncated
// set is evidence at scale, not a statement about the infinite return set;
// the exactness flag records how membership was decided.
struct ReturnSet {
  enum class Exactness { Exact, SoundPositives };

  int horizon = 0;
  std::vector<int> elems;  // sorted, distinct, within [0, horizon]
  Exactness exactness = Exactness::Exact;

  static ReturnSet of(int horizon, std::vector<int> elems, Exactness e);
  bool contains(int n) const;
  size_t count() const { return elems.size(); }
};

// Parameterized family predicates over truncated return sets.
struct FamilySpec {
  enum class Kind { Infinite, Cofinite, Thick, Syndetic, AP, UpperBanach };

  Kind kind = Kind::Infinite;
  long long param = 1;   // min_count / tail_from / run / gap / progression length
  double threshold = 0;  // upper Banach density threshold

  static FamilySpec infinite(long long min_count);
  static FamilySpec cofinite(long long tail_from);
  static FamilySpec thick(long long run);
  static FamilySpec syndetic(long long gap);
  static FamilySpec ap(long long length);
  static FamilySpec upper_banach(double theta);

  // Keyword form, e.g. "thick:8", "syndetic:4", "ubd:0.25".
  static FamilySpec parse(const std::string& text);
  std::string str() const;
};

// Witness or violation backing a verdict; re-validates against the return set.
struct FamilyCertificate {
  std::string kind;  // "count", "tail", "run", "gap", "ap", "window", "none"
  long long a = 0, b = 0, c = 0;
  double value = 0.0;
};

struct FamilyVerdict {
  bool holds = false;
  FamilyCertificate certificate;
  std::string truncation_note;
};

// Window semantics on [0, horizon]:
//   Infinite(m): at least m elements.
//   Cofinite(t): [t, H] fully contained.
//   Thick(l): some run of l+1 consecutive integers contained.
//   Syndetic(g): every g+1 consecutive integers in [0, H] meet the set.
//   AP(l): an (l+1)-term arithmetic progression is contained.
//   UpperBanach(theta): some window of length >= H/4 has density >= theta.
// Every variant is hereditarily upward in the return set.
FamilyVerdict member(const FamilySpec& fam, const ReturnSet& r);

// Re-checks a positive certificate (or re-confirms a violation) against r.
bool validate_certificate(const FamilySpec& fam, const ReturnSet& r, const FamilyCertificate& c);

// Max over windows [m, m+N] inside [0, H] with N >= min_window of
// #(R cap window) / (N + 1).
double upper_banach_density(const ReturnSet& r, int min_window);

struct BlockWitnessResult {
  bool holds = false;
  std::vector<long long> translations;  // one per F that was matched
};

// For each finite block F drawn from A's elements, looks for a translate
// n_F >= 0 with F + n_F inside B (and within B's horizon).
BlockWitnessResult block_witness_check(const ReturnSet& a_window, const ReturnSet& b_window,
                                       const std::vector<std::vector<int>>& f_list);

}  // namespace fuzzydyn
