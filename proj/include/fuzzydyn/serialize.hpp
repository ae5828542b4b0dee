#pragma once

#include <string>

#include "fuzzydyn/fuzzy.hpp"
#include "fuzzydyn/space.hpp"

namespace fuzzydyn {

// Line-oriented text format shared by compact-set and fuzzy-set files.
//
//   space finite <n>        followed by `labels ...` and n `row ...` lines
//   space shift <k>
//   space circle <bits>
//   p <point>               one record per point
//   level <rational>        starts the point list of one breakpoint level
//
// Points: finite by label, shift as prefix|cycle (empty prefix allowed),
// circle as the fixed-point numerator. Blank lines and #-comments ignored.
// Fuzzy files list each breakpoint with its full cut, low to high; parsing
// rebuilds the set as a max-combination, so the round trip is exact.

struct ParsedCompact {
  Space space;
  CompactSet set;
};

struct ParsedFuzzy {
  Space space;
  StepFuzzySet set;
};

Point parse_point_token(const Space& sp, const std::string& token);
std::string point_token(const Space& sp, const Point& p);

ParsedCompact parse_compact_text(const std::string& text);
ParsedFuzzy parse_fuzzy_text(const std::string& text);

std::string serialize_compact(const Space& sp, const CompactSet& k);
std::string serialize_fuzzy(const Space& sp, const StepFuzzySet& u);

ParsedFuzzy load_fuzzy_file(const std::string& path);
ParsedCompact load_compact_file(const std::string& path);

}  // namespace fuzzydyn
