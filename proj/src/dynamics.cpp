#include "fuzzydyn/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzydyn {

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

System System::finite_map(Space space, std::vector<int> table) {
  if (!space.is_finite()) throw usage_error("finite map needs a finite metric space");
  const int n = space.finite_desc().size();
  if (static_cast<int>(table.size()) != n) throw usage_error("transition table must be total");
  for (int t : table)
    if (t < 0 || t >= n) throw usage_error("transition table entry out of range");
  return System{FiniteMapSystem{std::move(space), std::move(table)}};
}

System System::full_shift(int alphabet) {
  if (alphabet < 2) throw usage_error("shift alphabet must have at least 2 symbols");
  return System{FullShiftSystem{alphabet}};
}

System System::circle_rotation(int precision_bits, uint64_t angle) {
  if (precision_bits < 32 || precision_bits > 64)
    throw usage_error("circle precision must be between 32 and 64 bits");
  return System{CircleRotationSystem{precision_bits, angle & circle_mask(precision_bits)}};
}

System System::golden_rotation(int precision_bits) {
  return circle_rotation(precision_bits, golden_angle(precision_bits));
}

System System::product(const System& base, int copies) {
  if (copies < 1) throw usage_error("product needs at least one copy");
  if (copies == 1) return base;
  return System{ProductSystem{std::make_shared<System>(base), copies}};
}

Space System::space() const {
  if (is_finite_map()) return finite_map_desc().space;
  if (is_full_shift()) return Space::shift(full_shift_desc().alphabet);
  if (is_rotation()) return Space::circle(rotation_desc().precision_bits);
  const auto& p = product_desc();
  return Space::product(p.base->space(), p.copies);
}

std::string System::kind_name() const {
  if (is_finite_map()) return "finite_map";
  if (is_full_shift()) return "full_shift";
  if (is_rotation()) return "circle_rotation";
  return "product";
}

uint64_t golden_angle(int bits) {
  // Consecutive Fibonacci ratios bracket (sqrt(5)-1)/2 within 1/(F92*F93),
  // far below one unit of the target grid, so both floors agree.
  const unsigned __int128 f91 = 4660046610375530309ull;
  const unsigned __int128 f92 = 7540113804746346429ull;
  const unsigned __int128 f93 = 12200160415121876738ull;
  uint64_t below = static_cast<uint64_t>((f92 << bits) / f93);
  uint64_t above = static_cast<uint64_t>((f91 << bits) / f92);
  if (below != above) throw contract_error("golden angle brackets disagree");
  return below;
}

// ---------------------------------------------------------------------------
// Stepping
// ---------------------------------------------------------------------------

namespace {

Point shift_drop(const ShiftPoint& x, long long n) {
  ShiftWord prefix = x.prefix;
  ShiftWord cycle = x.cycle;
  size_t plen = prefix.size();
  if (n <= static_cast<long long>(plen)) {
    prefix.erase(prefix.begin(), prefix.begin() + n);
  } else {
    long long extra = (n - static_cast<long long>(plen)) % static_cast<long long>(cycle.size());
    prefix.clear();
    std::rotate(cycle.begin(), cycle.begin() + extra, cycle.end());
  }
  return Point::shift(std::move(prefix), std::move(cycle));
}

uint64_t rotation_add(const CircleRotationSystem& rot, uint64_t value, long long n) {
  unsigned __int128 total = static_cast<unsigned __int128>(rot.angle) * static_cast<uint64_t>(n);
  return (value + static_cast<uint64_t>(total)) & circle_mask(rot.precision_bits);
}

}  // namespace

Point step(const System& sys, const Point& p) { return iterate(sys, p, 1); }

Point iterate(const System& sys, const Point& p, long long n) {
  if (n < 0) throw usage_error("iteration count must be non-negative");
  if (sys.is_finite_map()) {
    const auto& fm = sys.finite_map_desc();
    int i = p.as_finite().index;
    for (long long s = 0; s < n; ++s) i = fm.table[i];
    return Point::finite(i);
  }
  if (sys.is_full_shift()) return n == 0 ? p : shift_drop(p.as_shift(), n);
  if (sys.is_rotation()) return Point::circle(rotation_add(sys.rotation_desc(), p.as_circle().num, n));
  const auto& prod = sys.product_desc();
  std::vector<Point> comps;
  comps.reserve(p.as_product().comps.size());
  for (const auto& c : p.as_product().comps) comps.push_back(iterate(*prod.base, c, n));
  return Point::product(std::move(comps));
}

CompactSet hyper_image(const System& sys, const CompactSet& k) { return hyper_iterate(sys, k, 1); }

CompactSet hyper_iterate(const System& sys, const CompactSet& k, long long n) {
  std::vector<Point> pts;
  pts.reserve(k.size());
  for (const auto& p : k.points()) pts.push_back(iterate(sys, p, n));
  return CompactSet::of(std::move(pts));
}

StepFuzzySet zadeh_image(const System& sys, const StepFuzzySet& u) {
  return zadeh_iterate(sys, u, 1);
}

StepFuzzySet zadeh_iterate(const System& sys, const StepFuzzySet& u, long long n) {
  if (n < 0) throw usage_error("iteration count must be non-negative");
  if (n == 0) return u;
  std::vector<std::pair<Rational, CompactSet>> pairs;
  pairs.reserve(u.levels.size());
  for (size_t j = 0; j < u.levels.size(); ++j)
    pairs.emplace_back(u.levels[j], hyper_iterate(sys, u.level_sets[j], n));
  // Images of nested sets stay nested; the combination canonicalizes merges
  // caused by collapsing levels.
  return from_max_combination(std::move(pairs));
}

// ---------------------------------------------------------------------------
// Bases
// ---------------------------------------------------------------------------

bool ball_contains(const Space& sp, const BaseBall& ball, const Point& p) {
  if (std::holds_alternative<MetricBall>(ball.rep)) {
    const auto& mb = std::get<MetricBall>(ball.rep);
    return distance(sp, mb.center, p) < mb.radius;
  }
  if (std::holds_alternative<CylinderBall>(ball.rep)) {
    const auto& cb = std::get<CylinderBall>(ball.rep);
    const auto& x = p.as_shift();
    for (size_t i = 0; i < cb.word.size(); ++i)
      if (x.symbol(i) != cb.word[i]) return false;
    return true;
  }
  const auto& pb = *std::get<std::shared_ptr<ProductBall>>(ball.rep);
  const auto& comps = p.as_product().comps;
  const auto& base = *sp.product_desc().base;
  if (comps.size() != pb.comps.size()) throw usage_error("product ball arity mismatch");
  for (size_t i = 0; i < comps.size(); ++i)
    if (!ball_contains(base, pb.comps[i], comps[i])) return false;
  return true;
}

Point ball_representative(const Space& sp, const BaseBall& ball) {
  if (std::holds_alternative<MetricBall>(ball.rep)) return std::get<MetricBall>(ball.rep).center;
  if (std::holds_alternative<CylinderBall>(ball.rep))
    return Point::shift({}, std::get<CylinderBall>(ball.rep).word);
  const auto& pb = *std::get<std::shared_ptr<ProductBall>>(ball.rep);
  const auto& base = *sp.product_desc().base;
  std::vector<Point> comps;
  for (const auto& c : pb.comps) comps.push_back(ball_representative(base, c));
  return Point::product(std::move(comps));
}

double ball_radius(const Space& sp, const BaseBall& ball) {
  if (std::holds_alternative<MetricBall>(ball.rep)) return std::get<MetricBall>(ball.rep).radius;
  if (std::holds_alternative<CylinderBall>(ball.rep))
    return std::ldexp(1.0, -static_cast<int>(std::get<CylinderBall>(ball.rep).word.size()));
  const auto& pb = *std::get<std::shared_ptr<ProductBall>>(ball.rep);
  const auto& base = *sp.product_desc().base;
  double r = 0.0;
  for (const auto& c : pb.comps) r = std::max(r, ball_radius(base, c));
  return r;
}

namespace {

std::string word_name(const ShiftWord& w) {
  std::string s = "[";
  for (uint8_t c : w) s += static_cast<char>(c < 10 ? '0' + c : 'a' + (c - 10));
  return s + "]";
}

void enumerate_words(int alphabet, int maxlen, std::vector<ShiftWord>& out) {
  std::vector<ShiftWord> cur{{}};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<ShiftWord> next;
    for (const auto& w : cur)
      for (int c = 0; c < alphabet; ++c) {
        ShiftWord e = w;
        e.push_back(static_cast<uint8_t>(c));
        out.push_back(e);
        next.push_back(std::move(e));
      }
    cur = std::move(next);
  }
}

}  // namespace

std::vector<BasisElement> basis(const System& sys, int resolution) {
  if (resolution < 1) throw usage_error("basis resolution must be positive");
  std::vector<BasisElement> out;
  if (sys.is_finite_map()) {
    const auto& f = sys.finite_map_desc().space.finite_desc();
    double minpos = 1.0;
    for (int i = 0; i < f.size(); ++i)
      for (int j = 0; j < f.size(); ++j)
        if (i != j) minpos = std::min(minpos, f.at(i, j));
    for (int i = 0; i < f.size(); ++i)
      out.push_back({f.labels[i], BaseBall{MetricBall{Point::finite(i), minpos / 2.0}}});
    return out;
  }
  if (sys.is_full_shift()) {
    std::vector<ShiftWord> words;
    enumerate_words(sys.full_shift_desc().alphabet, resolution, words);
    for (auto& w : words) out.push_back({word_name(w), BaseBall{CylinderBall{std::move(w)}}});
    return out;
  }
  if (sys.is_rotation()) {
    int bits = sys.rotation_desc().precision_bits;
    for (int i = 0; i < resolution; ++i) {
      unsigned __int128 num = (static_cast<unsigned __int128>(1) << bits) * i / resolution;
      out.push_back({"arc" + std::to_string(i),
                     BaseBall{MetricBall{Point::circle(static_cast<uint64_t>(num)),
                                         1.0 / (2.0 * resolution)}}});
    }
    return out;
  }
  const auto& prod = sys.product_desc();
  auto base_elems = basis(*prod.base, resolution);
  std::vector<std::vector<size_t>> tuples{{}};
  for (int c = 0; c < prod.copies; ++c) {
    std::vector<std::vector<size_t>> next;
    for (const auto& t : tuples)
      for (size_t i = 0; i < base_elems.size(); ++i) {
        auto e = t;
        e.push_back(i);
        next.push_back(std::move(e));
      }
    tuples = std::move(next);
  }
  for (const auto& t : tuples) {
    auto pb = std::make_shared<ProductBall>();
    std::string name;
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) name += "x";
      name += base_elems[t[i]].name;
      pb->comps.push_back(base_elems[t[i]].ball);
    }
    out.push_back({std::move(name), BaseBall{std::move(pb)}});
  }
  return out;
}

Point de_bruijn_point(int alphabet, int length) {
  if (alphabet < 2 || length < 1) throw usage_error("de Bruijn parameters out of range");
  // FKM construction: concatenate the Lyndon words of length dividing n in
  // lexicographic order; the result is a cyclic de Bruijn sequence of order n.
  ShiftWord seq;
  std::vector<uint8_t> a(static_cast<size_t>(length) + 1, 0);
  auto db = [&](auto&& self, int t, int p) -> void {
    if (t > length) {
      if (length % p == 0)
        for (int i = 1; i <= p; ++i) seq.push_back(a[i]);
      return;
    }
    a[t] = a[t - p];
    self(self, t + 1, p);
    for (int j = a[t - p] + 1; j < alphabet; ++j) {
      a[t] = static_cast<uint8_t>(j);
      self(self, t + 1, t);
    }
  };
  db(db, 1, 1);
  return Point::shift({}, std::move(seq));
}

}  // namespace fuzzydyn
