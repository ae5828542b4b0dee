#include "fuzzydyn/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace fuzzydyn {

// ---------------------------------------------------------------------------
// Space construction and validation
// ---------------------------------------------------------------------------

Space Space::finite(std::vector<std::string> labels, std::vector<double> dist) {
  const size_t n = labels.size();
  if (n == 0) throw usage_error("finite metric space needs at least one point");
  if (dist.size() != n * n) throw usage_error("distance table must be n*n");
  for (size_t i = 0; i < n; ++i) {
    if (dist[i * n + i] != 0.0) throw usage_error("distance table diagonal must be zero");
    for (size_t j = 0; j < n; ++j) {
      if (dist[i * n + j] < 0.0) throw usage_error("negative distance in table");
      if (dist[i * n + j] != dist[j * n + i]) throw usage_error("distance table not symmetric");
      if (i != j && dist[i * n + j] == 0.0)
        throw usage_error("distinct points at distance zero: " + labels[i] + "," + labels[j]);
    }
  }
  // Triangle inequality, with a small slack for tables built from rounded
  // floating computations.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (dist[i * n + j] > dist[i * n + k] + dist[k * n + j] + 1e-9)
          throw usage_error("distance table violates the triangle inequality");
  return Space{FiniteMetricSpace{std::move(labels), std::move(dist)}};
}

Space Space::shift(int alphabet) {
  if (alphabet < 2) throw usage_error("shift alphabet must have at least 2 symbols");
  return Space{ShiftSpaceDesc{alphabet}};
}

Space Space::circle(int precision_bits) {
  if (precision_bits < 32 || precision_bits > 64)
    throw usage_error("circle precision must be between 32 and 64 bits");
  return Space{CircleSpaceDesc{precision_bits}};
}

Space Space::product(const Space& base, int copies) {
  if (copies < 1) throw usage_error("product needs at least one copy");
  if (copies == 1) return base;
  return Space{ProductSpaceDesc{std::make_shared<Space>(base), copies}};
}

std::string Space::kind_name() const {
  if (is_finite()) return "finite";
  if (is_shift()) return "shift";
  if (is_circle()) return "circle";
  return "product";
}

bool operator==(const Space& a, const Space& b) {
  if (a.desc.index() != b.desc.index()) return false;
  if (a.is_finite()) {
    const auto& fa = a.finite_desc();
    const auto& fb = b.finite_desc();
    return fa.labels == fb.labels && fa.dist == fb.dist;
  }
  if (a.is_shift()) return a.shift_desc().alphabet == b.shift_desc().alphabet;
  if (a.is_circle()) return a.circle_desc().precision_bits == b.circle_desc().precision_bits;
  const auto& pa = a.product_desc();
  const auto& pb = b.product_desc();
  return pa.copies == pb.copies && *pa.base == *pb.base;
}

// ---------------------------------------------------------------------------
// Shift point canonical form
// ---------------------------------------------------------------------------

namespace {

// Smallest period of w (primitive root length).
size_t primitive_period(const ShiftWord& w) {
  for (size_t p = 1; p < w.size(); ++p) {
    if (w.size() % p != 0) continue;
    bool ok = true;
    for (size_t i = p; i < w.size() && ok; ++i) ok = (w[i] == w[i % p]);
    if (ok) return p;
  }
  return w.size();
}

}  // namespace

ShiftPoint make_shift_point(ShiftWord prefix, ShiftWord cycle) {
  if (cycle.empty()) throw usage_error("shift point needs a non-empty cycle");
  size_t p = primitive_period(cycle);
  if (p < cycle.size()) cycle.resize(p);
  // Absorb prefix symbols that already follow the cycle, rotating the cycle so
  // the represented sequence is unchanged. Terminates at the minimal prefix.
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    prefix.pop_back();
    std::rotate(cycle.begin(), cycle.end() - 1, cycle.end());
  }
  return ShiftPoint{std::move(prefix), std::move(cycle)};
}

Point Point::shift(ShiftWord prefix, ShiftWord cycle) {
  return Point{make_shift_point(std::move(prefix), std::move(cycle))};
}

// ---------------------------------------------------------------------------
// Point ordering and printing
// ---------------------------------------------------------------------------

namespace {

template <typename T>
int cmp3(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

}  // namespace

int point_compare(const Point& a, const Point& b) {
  if (a.rep.index() != b.rep.index())
    return cmp3(a.rep.index(), b.rep.index());
  switch (a.rep.index()) {
    case 0:
      return cmp3(a.as_finite().index, b.as_finite().index);
    case 1: {
      const auto& x = a.as_shift();
      const auto& y = b.as_shift();
      if (int c = cmp3(x.prefix, y.prefix)) return c;
      return cmp3(x.cycle, y.cycle);
    }
    case 2:
      return cmp3(a.as_circle().num, b.as_circle().num);
    default: {
      const auto& x = a.as_product().comps;
      const auto& y = b.as_product().comps;
      if (int c = cmp3(x.size(), y.size())) return c;
      for (size_t i = 0; i < x.size(); ++i)
        if (int c = point_compare(x[i], y[i])) return c;
      return 0;
    }
  }
}

namespace {

std::string word_str(const ShiftWord& w) {
  std::string s;
  s.reserve(w.size());
  for (uint8_t c : w) s += static_cast<char>(c < 10 ? '0' + c : 'a' + (c - 10));
  return s;
}

}  // namespace

std::string point_str(const Point& p) {
  switch (p.rep.index()) {
    case 0:
      return "#" + std::to_string(p.as_finite().index);
    case 1: {
      const auto& sp = p.as_shift();
      return word_str(sp.prefix) + "|" + word_str(sp.cycle);
    }
    case 2:
      return std::to_string(p.as_circle().num);
    default: {
      std::string s;
      const auto& comps = p.as_product().comps;
      for (size_t i = 0; i < comps.size(); ++i) {
        if (i) s += ";";
        s += point_str(comps[i]);
      }
      return "(" + s + ")";
    }
  }
}

// ---------------------------------------------------------------------------
// Compact sets
// ---------------------------------------------------------------------------

CompactSet CompactSet::of(std::vector<Point> pts) {
  if (pts.empty()) throw usage_error("compact set must be non-empty");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  CompactSet k;
  k.pts_ = std::move(pts);
  return k;
}

bool CompactSet::contains(const Point& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

std::string compact_str(const CompactSet& k) {
  std::string s = "{";
  for (size_t i = 0; i < k.points().size(); ++i) {
    if (i) s += ",";
    s += point_str(k.points()[i]);
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

uint64_t circle_mask(int precision_bits) {
  if (precision_bits >= 64) return ~0ull;
  return (1ull << precision_bits) - 1;
}

uint64_t circle_sub(uint64_t a, uint64_t b, int precision_bits) {
  return (a - b) & circle_mask(precision_bits);
}

double circle_distance(uint64_t a, uint64_t b, int precision_bits) {
  uint64_t d1 = circle_sub(a, b, precision_bits);
  uint64_t d2 = circle_sub(b, a, precision_bits);
  uint64_t m = std::min(d1, d2);
  return std::ldexp(static_cast<double>(m), -precision_bits);
}

namespace {

double shift_distance(const Space& sp, const ShiftPoint& x, const ShiftPoint& y) {
  (void)sp;
  if (x.prefix == y.prefix && x.cycle == y.cycle) return 0.0;
  // Beyond max(prefix)+lcm(cycles) both tails are periodic with a common
  // period and a full agreeing window would force equality, so the first
  // disagreement lies within the bound.
  size_t cl = std::lcm(x.cycle.size(), y.cycle.size());
  size_t bound = std::max(x.prefix.size(), y.prefix.size()) + cl;
  for (size_t i = 0; i < bound; ++i)
    if (x.symbol(i) != y.symbol(i)) return std::ldexp(1.0, -static_cast<int>(i));
  // Unreachable for canonical distinct points.
  throw usage_error("non-canonical shift points compared");
}

}  // namespace

double distance(const Space& sp, const Point& p, const Point& q) {
  if (p.rep.index() != q.rep.index()) throw usage_error("points from different space kinds");
  if (sp.is_finite()) {
    const auto& f = sp.finite_desc();
    int i = p.as_finite().index;
    int j = q.as_finite().index;
    if (i < 0 || j < 0 || i >= f.size() || j >= f.size())
      throw usage_error("finite point index out of range");
    return f.at(i, j);
  }
  if (sp.is_shift()) return shift_distance(sp, p.as_shift(), q.as_shift());
  if (sp.is_circle())
    return circle_distance(p.as_circle().num, q.as_circle().num, sp.circle_desc().precision_bits);
  const auto& prod = sp.product_desc();
  const auto& a = p.as_product().comps;
  const auto& b = q.as_product().comps;
  if (static_cast<int>(a.size()) != prod.copies || a.size() != b.size())
    throw usage_error("product point arity mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, distance(*prod.base, a[i], b[i]));
  return m;
}

double hausdorff(const Space& sp, const CompactSet& a, const CompactSet& b) {
  auto directed = [&](const CompactSet& x, const CompactSet& y) {
    double h = 0.0;
    for (const auto& p : x.points()) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : y.points()) {
        best = std::min(best, distance(sp, p, q));
        if (best == 0.0) break;
      }
      h = std::max(h, best);
    }
    return h;
  };
  return std::max(directed(a, b), directed(b, a));
}

bool within_thickening(const Space& sp, const CompactSet& a, const CompactSet& b, double eps) {
  if (eps < 0.0) throw usage_error("thickening radius must be non-negative");
  for (const auto& p : a.points()) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : b.points()) {
      best = std::min(best, distance(sp, p, q));
      if (best <= eps) break;
    }
    if (best > eps) return false;
  }
  return true;
}

}  // namespace fuzzydyn
