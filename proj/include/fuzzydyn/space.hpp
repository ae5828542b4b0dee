#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fuzzydyn/errors.hpp"

namespace fuzzydyn {

// ---------------------------------------------------------------------------
// Space descriptors
// ---------------------------------------------------------------------------

struct Space;

// Finite labeled metric space with an explicit distance table.
struct FiniteMetricSpace {
  std::vector<std::string> labels;
  std::vector<double> dist;  // row-major n*n

  int size() const { return static_cast<int>(labels.size()); }
  double at(int i, int j) const { return dist[static_cast<size_t>(i) * labels.size() + j]; }
};

// One-sided full shift over an alphabet of k symbols, d(x,y) = 2^-m with m the
// first index of disagreement.
struct ShiftSpaceDesc {
  int alphabet = 2;
};

// Circle [0,1) in P-bit fixed point with the arc metric. All verdicts based on
// circle arithmetic carry tolerance 2^(-P+2).
struct CircleSpaceDesc {
  int precision_bits = 64;
};

// N-fold product with the max metric.
struct ProductSpaceDesc {
  std::shared_ptr<const Space> base;
  int copies = 1;
};

struct Space {
  std::variant<FiniteMetricSpace, ShiftSpaceDesc, CircleSpaceDesc, ProductSpaceDesc> desc;

  static Space finite(std::vector<std::string> labels, std::vector<double> dist);
  static Space shift(int alphabet);
  static Space circle(int precision_bits);
  static Space product(const Space& base, int copies);

  bool is_finite() const { return std::holds_alternative<FiniteMetricSpace>(desc); }
  bool is_shift() const { return std::holds_alternative<ShiftSpaceDesc>(desc); }
  bool is_circle() const { return std::holds_alternative<CircleSpaceDesc>(desc); }
  bool is_product() const { return std::holds_alternative<ProductSpaceDesc>(desc); }

  const FiniteMetricSpace& finite_desc() const { return std::get<FiniteMetricSpace>(desc); }
  const ShiftSpaceDesc& shift_desc() const { return std::get<ShiftSpaceDesc>(desc); }
  const CircleSpaceDesc& circle_desc() const { return std::get<CircleSpaceDesc>(desc); }
  const ProductSpaceDesc& product_desc() const { return std::get<ProductSpaceDesc>(desc); }

  std::string kind_name() const;
};

bool operator==(const Space& a, const Space& b);
inline bool operator!=(const Space& a, const Space& b) { return !(a == b); }

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

using ShiftWord = std::vector<uint8_t>;

// Eventually periodic sequence prefix . cycle^inf, kept in canonical form:
// minimal prefix and primitive cycle, so equality is structural.
struct ShiftPoint {
  ShiftWord prefix;
  ShiftWord cycle;

  uint8_t symbol(size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return cycle[(i - prefix.size()) % cycle.size()];
  }
};

struct FinitePoint {
  int index = 0;
};

struct CirclePoint {
  uint64_t num = 0;  // value = num / 2^P
};

struct Point;
struct ProductPoint {
  std::vector<Point> comps;
};

struct Point {
  std::variant<FinitePoint, ShiftPoint, CirclePoint, ProductPoint> rep;

  static Point finite(int index) { return Point{FinitePoint{index}}; }
  static Point shift(ShiftWord prefix, ShiftWord cycle);
  static Point circle(uint64_t num) { return Point{CirclePoint{num}}; }
  static Point product(std::vector<Point> comps) { return Point{ProductPoint{std::move(comps)}}; }

  const FinitePoint& as_finite() const { return std::get<FinitePoint>(rep); }
  const ShiftPoint& as_shift() const { return std::get<ShiftPoint>(rep); }
  const CirclePoint& as_circle() const { return std::get<CirclePoint>(rep); }
  const ProductPoint& as_product() const { return std::get<ProductPoint>(rep); }
};

// Canonicalizes: primitive cycle, minimal prefix.
ShiftPoint make_shift_point(ShiftWord prefix, ShiftWord cycle);

int point_compare(const Point& a, const Point& b);
inline bool operator==(const Point& a, const Point& b) { return point_compare(a, b) == 0; }
inline bool operator!=(const Point& a, const Point& b) { return point_compare(a, b) != 0; }
inline bool operator<(const Point& a, const Point& b) { return point_compare(a, b) < 0; }

std::string point_str(const Point& p);

// ---------------------------------------------------------------------------
// Compact sets
// ---------------------------------------------------------------------------

// Non-empty finite point set, deduplicated and canonically ordered, so set
// equality is structural equality.
class CompactSet {
 public:
  static CompactSet of(std::vector<Point> pts);

  const std::vector<Point>& points() const { return pts_; }
  size_t size() const { return pts_.size(); }
  bool contains(const Point& p) const;

  friend bool operator==(const CompactSet& a, const CompactSet& b) { return a.pts_ == b.pts_; }
  friend bool operator!=(const CompactSet& a, const CompactSet& b) { return !(a == b); }

 private:
  std::vector<Point> pts_;
};

std::string compact_str(const CompactSet& k);

// ---------------------------------------------------------------------------
// Metric operations
// ---------------------------------------------------------------------------

double distance(const Space& sp, const Point& p, const Point& q);

// Exact max of the two directed sup-min distances over the finite point lists.
double hausdorff(const Space& sp, const CompactSet& a, const CompactSet& b);

// True iff every point of a lies within eps (closed) of some point of b,
// i.e. a is contained in the closed eps-thickening of b.
bool within_thickening(const Space& sp, const CompactSet& a, const CompactSet& b, double eps);

// Fixed-point circle helpers.
uint64_t circle_mask(int precision_bits);
uint64_t circle_sub(uint64_t a, uint64_t b, int precision_bits);
double circle_distance(uint64_t a, uint64_t b, int precision_bits);

}  // namespace fuzzydyn
