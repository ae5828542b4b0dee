#include "fuzzydyn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fuzzydyn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Rational> merged_breakpoints(const StepFuzzySet& u, const StepFuzzySet& v) {
  std::vector<Rational> grid = u.levels;
  grid.insert(grid.end(), v.levels.begin(), v.levels.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

double d_inf(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v) {
  double best = hausdorff(sp, u.support(), v.support());  // the alpha = 0 comparison
  for (const auto& a : merged_breakpoints(u, v))
    best = std::max(best, hausdorff(sp, alpha_level(u, a), alpha_level(v, a)));
  return best;
}

// ---------------------------------------------------------------------------
// Endograph / sendograph closed forms
// ---------------------------------------------------------------------------

namespace {

double positive_part(double t) { return t > 0.0 ? t : 0.0; }

// Directed endograph gap. For a source column over x the cost of a target
// column over y is max(d(x,y), pos(u(x)-v(y))); going to any height-zero
// target caps the cost at u(x), with y = x optimal among those.
double directed_endo(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v, bool cap) {
  double h = 0.0;
  for (const auto& x : u.support().points()) {
    double mu = membership(u, x).to_double();
    double best = cap ? mu : kInf;
    for (const auto& y : v.support().points()) {
      double cand = std::max(distance(sp, x, y), positive_part(mu - membership(v, y).to_double()));
      best = std::min(best, cand);
      if (best == 0.0) break;
    }
    h = std::max(h, best);
  }
  return h;
}

}  // namespace

double d_endo(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v) {
  return std::max(directed_endo(sp, u, v, true), directed_endo(sp, v, u, true));
}

double d_sendo(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v) {
  return std::max(directed_endo(sp, u, v, false), directed_endo(sp, v, u, false));
}

// ---------------------------------------------------------------------------
// Sampling oracles
// ---------------------------------------------------------------------------

namespace {

struct Column {
  const Point* pt;
  double height;
};

std::vector<Column> columns_of(const StepFuzzySet& u) {
  std::vector<Column> cols;
  for (const auto& x : u.support().points()) cols.push_back({&x, membership(u, x).to_double()});
  return cols;
}

// Distance from sample (x, h) to the sampled column over y with `res` height
// steps: the nearest sampled height in [0, hy] is found by clamped rounding,
// which is exactly the minimum over the grid.
double sample_to_column(const Space& sp, const Point& x, double h, const Column& c, int res) {
  double dxy = distance(sp, x, *c.pt);
  double step = c.height / res;
  double vert;
  if (c.height == 0.0) {
    vert = h;
  } else {
    double j = std::floor(h / step + 0.5);
    j = std::max(0.0, std::min(static_cast<double>(res), j));
    vert = std::fabs(h - j * step);
  }
  return std::max(dxy, vert);
}

double directed_cloud(const Space& sp, const std::vector<Column>& from,
                      const std::vector<Column>& to, int res,
                      const std::vector<const Point*>& shared_zeros) {
  double h = 0.0;
  for (const auto& cf : from) {
    for (int j = 0; j <= res; ++j) {
      double height = cf.height * j / res;
      double best = kInf;
      for (const auto& ct : to) best = std::min(best, sample_to_column(sp, *cf.pt, height, ct, res));
      // Height-zero points present in both endographs.
      for (const auto* z : shared_zeros)
        best = std::min(best, std::max(distance(sp, *cf.pt, *z), height));
      h = std::max(h, best);
    }
  }
  return h;
}

}  // namespace

double endo_oracle(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v, int resolution) {
  if (resolution < 8) throw usage_error("oracle resolution must be at least 8");
  auto cu = columns_of(u);
  auto cv = columns_of(v);
  // Both endographs contain every point at height zero; the supports of both
  // sides suffice as targets since y = x dominates all other zero targets.
  std::vector<const Point*> zeros;
  for (const auto& c : cu) zeros.push_back(c.pt);
  for (const auto& c : cv) zeros.push_back(c.pt);
  return std::max(directed_cloud(sp, cu, cv, resolution, zeros),
                  directed_cloud(sp, cv, cu, resolution, zeros));
}

double sendo_oracle(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v, int resolution) {
  if (resolution < 8) throw usage_error("oracle resolution must be at least 8");
  auto cu = columns_of(u);
  auto cv = columns_of(v);
  std::vector<const Point*> none;
  return std::max(directed_cloud(sp, cu, cv, resolution, none),
                  directed_cloud(sp, cv, cu, resolution, none));
}

// ---------------------------------------------------------------------------
// Skorokhod metric
// ---------------------------------------------------------------------------

namespace {

// Relabeling the breakpoints of v only permutes which of its level sets is
// active on each subinterval of [0,1]; the sets themselves are untouched.
// Slot encoding against u's grid gamma_0 = 0 < gamma_1 < ... < gamma_N = 1:
//   slot 2r   = exactly gamma_r,
//   slot 2r+1 = strictly inside (gamma_r, gamma_{r+1}).
// For a placement t_{j-1} at slot p and t_j at slot q, the interval
// (t_{j-1}, t_j] overlaps exactly u's pieces hi(p) .. lo(q).
struct SkorokhodProblem {
  std::vector<double> gamma;              // u grid values, gamma[0] = 0
  std::vector<Rational> gamma_rat;        // same, exact
  std::vector<double> beta;               // v breakpoints
  std::vector<std::vector<double>> pairD; // pairD[i][j], pieces 1..N x v levels 1..M
  int N = 0, M = 0;

  int hi(int slot) const { return slot / 2 + 1; }
  int lo(int slot) const { return (slot + 1) / 2; }

  bool slot_allowed(int j, int slot, double eps) const {
    // j is 1-based; top breakpoint pinned at 1, earlier ones strictly below.
    if (j == M) return slot == 2 * N;
    if (slot >= 2 * N) return false;
    if (slot % 2 == 0) {
      int r = slot / 2;
      if (r == 0) return false;  // images stay strictly positive
      return std::fabs(gamma[r] - beta[j - 1]) <= eps;
    }
    int r = slot / 2;
    // Closed window-vs-segment test. A window only touching a boundary makes
    // this slot claim a superset of the constraints of the exact slot at that
    // boundary, which is available at the same eps, so no false positives.
    return beta[j - 1] + eps >= gamma[r] && beta[j - 1] - eps <= gamma[r + 1];
  }

  bool range_ok(int j, int piece_from, int piece_to, double eps) const {
    for (int i = piece_from; i <= piece_to; ++i)
      if (pairD[i - 1][j - 1] > eps) return false;
    return true;
  }
};

// reach[j][slot]: t_1..t_j placeable with t_j at slot, all gap constraints met.
std::vector<std::vector<char>> feasibility_table(const SkorokhodProblem& P, double eps) {
  int S = 2 * P.N + 1;
  std::vector<std::vector<char>> reach(P.M + 1, std::vector<char>(S, 0));
  reach[0][0] = 1;  // virtual start at 0
  for (int j = 1; j <= P.M; ++j) {
    for (int p = 0; p < S; ++p) {
      if (!reach[j - 1][p]) continue;
      for (int q = p; q < S; ++q) {
        if (q == p && p % 2 == 0) continue;  // equal exact placements collide
        if (!P.slot_allowed(j, q, eps)) continue;
        if (!P.range_ok(j, P.hi(p), P.lo(q), eps)) continue;
        reach[j][q] = 1;
      }
    }
  }
  return reach;
}

bool feasible(const SkorokhodProblem& P, double eps) {
  return feasibility_table(P, eps)[P.M][2 * P.N] != 0;
}

// Reconstructs the lexicographically smallest feasible slot sequence and turns
// it into concrete image values (exact grid values for exact slots, interval
// midpoints inside open segments).
std::vector<double> reconstruct(const SkorokhodProblem& P, double eps) {
  int S = 2 * P.N + 1;
  // can_finish[j][slot]: t_{j+1}..t_M placeable given t_j at slot.
  std::vector<std::vector<char>> fin(P.M + 1, std::vector<char>(S, 0));
  fin[P.M][2 * P.N] = 1;
  for (int j = P.M; j-- > 0;) {
    for (int p = 0; p < S; ++p) {
      for (int q = p; q < S; ++q) {
        if (q == p && p % 2 == 0) continue;
        if (!P.slot_allowed(j + 1, q, eps)) continue;
        if (!P.range_ok(j + 1, P.hi(p), P.lo(q), eps)) continue;
        if (fin[j + 1][q]) {
          fin[j][p] = 1;
          break;
        }
      }
    }
  }

  std::vector<int> slots;
  std::vector<double> values;
  int p = 0;
  double prev = 0.0;
  for (int j = 1; j <= P.M; ++j) {
    int chosen = -1;
    for (int q = p; q < S; ++q) {
      if (q == p && p % 2 == 0) continue;
      if (!P.slot_allowed(j, q, eps)) continue;
      if (!P.range_ok(j, P.hi(p), P.lo(q), eps)) continue;
      if (!fin[j][q]) continue;
      chosen = q;
      break;
    }
    if (chosen < 0) throw contract_error("alignment reconstruction lost feasibility");
    double val;
    if (chosen % 2 == 0) {
      val = P.gamma[chosen / 2];
    } else {
      int r = chosen / 2;
      double lo = std::max({P.gamma[r], P.beta[j - 1] - eps, prev});
      double hi = std::min(P.gamma[r + 1], P.beta[j - 1] + eps);
      val = (lo + hi) / 2.0;
    }
    slots.push_back(chosen);
    values.push_back(val);
    p = chosen;
    prev = val;
  }
  return values;
}

}  // namespace

std::pair<double, SkorokhodAlignment> d_skorokhod(const Space& sp, const StepFuzzySet& u,
                                                  const StepFuzzySet& v) {
  SkorokhodProblem P;
  P.N = static_cast<int>(u.levels.size());
  P.M = static_cast<int>(v.levels.size());
  P.gamma.push_back(0.0);
  P.gamma_rat.push_back(Rational(0));
  for (const auto& a : u.levels) {
    P.gamma.push_back(a.to_double());
    P.gamma_rat.push_back(a);
  }
  for (const auto& b : v.levels) P.beta.push_back(b.to_double());
  P.pairD.assign(P.N, std::vector<double>(P.M, 0.0));
  for (int i = 0; i < P.N; ++i)
    for (int j = 0; j < P.M; ++j)
      P.pairD[i][j] = hausdorff(sp, u.level_sets[i], v.level_sets[j]);

  // Critical values: breakpoint offsets and all cross Hausdorff gaps; the
  // optimum is one of them. Built with the same double arithmetic the
  // feasibility checks use, so comparisons at a critical value are exact.
  std::vector<double> crit{0.0, 1.0};
  std::vector<double> betas = P.beta;
  betas.push_back(0.0);
  for (double g : P.gamma)
    for (double b : betas) crit.push_back(std::fabs(g - b));
  for (const auto& row : P.pairD) crit.insert(crit.end(), row.begin(), row.end());
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  // Feasibility is monotone in eps; binary search the smallest critical value.
  size_t lo = 0, hi = crit.size() - 1;
  if (!feasible(P, crit[hi]))
    throw contract_error("skorokhod feasibility must hold at the largest critical value");
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (feasible(P, crit[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  double eps = crit[lo];

  SkorokhodAlignment align;
  align.epsilon = eps;
  auto values = reconstruct(P, eps);
  for (int j = 0; j < P.M; ++j) align.images.emplace_back(v.levels[j], values[j]);
  return {eps, align};
}

double skorokhod_oracle(const Space& sp, const StepFuzzySet& u, const StepFuzzySet& v, int grid) {
  if (grid < 16) throw usage_error("oracle grid must be at least 16");
  const int M = static_cast<int>(v.levels.size());
  // C(grid-1, M-1) placements; refuse to enumerate past a sane budget.
  double combos = 1.0;
  for (int i = 0; i < M - 1; ++i) combos *= static_cast<double>(grid - 1 - i) / (i + 1);
  if (combos > 2e6) throw budget_error("too many levels for the placement enumeration");

  std::vector<double> beta;
  for (const auto& b : v.levels) beta.push_back(b.to_double());

  // Precompute cut gaps on the merged evaluation structure: for a placement t,
  // the sup over alpha is a max over u's pieces of the pair gap against the
  // v set active there.
  const int N = static_cast<int>(u.levels.size());
  std::vector<double> gamma{0.0};
  for (const auto& a : u.levels) gamma.push_back(a.to_double());
  std::vector<std::vector<double>> pairD(N, std::vector<double>(M));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < M; ++j) pairD[i][j] = hausdorff(sp, u.level_sets[i], v.level_sets[j]);

  auto objective = [&](const std::vector<double>& t) {
    double obj = 0.0;
    for (int j = 0; j < M; ++j) obj = std::max(obj, std::fabs(t[j] - beta[j]));
    // Evaluate the induced sup metric at every breakpoint of the merged grid.
    std::vector<double> points;
    points.insert(points.end(), gamma.begin() + 1, gamma.end());
    points.insert(points.end(), t.begin(), t.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (double a : points) {
      int iu = static_cast<int>(std::lower_bound(gamma.begin() + 1, gamma.end(), a) -
                                (gamma.begin() + 1));
      int jv = static_cast<int>(std::lower_bound(t.begin(), t.end(), a) - t.begin());
      iu = std::min(iu, N - 1);
      jv = std::min(jv, M - 1);
      obj = std::max(obj, pairD[iu][jv]);
    }
    obj = std::max(obj, pairD[0][0]);  // supports, alpha = 0
    return obj;
  };

  double best = kInf;
  std::vector<double> t(M);
  t[M - 1] = 1.0;
  // Choose strictly increasing grid values for the first M-1 breakpoints.
  std::vector<int> idx(M - 1);
  for (int i = 0; i < M - 1; ++i) idx[i] = i + 1;
  if (M == 1) return objective(t);
  while (true) {
    for (int i = 0; i < M - 1; ++i) t[i] = static_cast<double>(idx[i]) / grid;
    if (t.empty() || t[M - 1] > t[M - 2]) best = std::min(best, objective(t));
    int i = M - 2;
    while (i >= 0 && idx[i] == grid - (M - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int l = i + 1; l < M - 1; ++l) idx[l] = idx[l - 1] + 1;
  }
  return best;
}

bool level_stability_check(const Space& sp, const CompactSet& k, const StepFuzzySet& u,
                           double tol, double* delta_out, Rational* bad_level) {
  double delta = d_endo(sp, from_characteristic(k), u);
  if (delta_out) *delta_out = delta;
  if (delta >= 0.5) throw usage_error("stability check requires an endograph gap below 1/2");
  // Cuts are constant between breakpoints, so checking each piece whose level
  // interval meets (delta, 1-delta] covers every alpha in the interval.
  for (size_t j = 0; j < u.levels.size(); ++j) {
    double lo = j == 0 ? 0.0 : u.levels[j - 1].to_double();
    double hi = u.levels[j].to_double();
    bool meets = lo < (1.0 - delta) && hi > delta;
    if (!meets) continue;
    if (hausdorff(sp, k, u.level_sets[j]) > delta + tol) {
      if (bad_level) *bad_level = u.levels[j];
      return false;
    }
  }
  return true;
}

}  // namespace fuzzydyn
