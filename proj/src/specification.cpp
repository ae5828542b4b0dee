#include <cmath>
#include <sstream>

#include "fuzzydyn/analysis.hpp"

namespace fuzzydyn {

namespace {

void check_interval_shape(const std::vector<std::pair<long long, long long>>& intervals,
                          long long n_eps, size_t ntargets) {
  if (ntargets < 2) throw usage_error("specification instances need at least two targets");
  if (intervals.size() != ntargets)
    throw usage_error("one interval per target required");
  if (intervals.front().first != 0) throw usage_error("first interval must start at 0");
  if (n_eps < 1) throw usage_error("gap bound must be positive");
  for (size_t r = 0; r < intervals.size(); ++r) {
    if (intervals[r].first > intervals[r].second)
      throw usage_error("interval bounds out of order");
    if (r + 1 < intervals.size() && intervals[r + 1].first - intervals[r].second < n_eps)
      throw usage_error("consecutive intervals closer than the gap bound");
  }
}

int dyadic_exponent(double eps) {
  int m = static_cast<int>(std::lround(-std::log2(eps)));
  if (m < 1 || std::ldexp(1.0, -m) != eps)
    throw usage_error("tolerance must be a negative power of two");
  return m;
}

}  // namespace

void validate_instance(const SpecInstance& inst) {
  check_interval_shape(inst.intervals, inst.n_eps, inst.targets.size());
  if (!(inst.eps > 0.0)) throw usage_error("tolerance must be positive");
}

Point build_spec_witness(const System& sys, const SpecInstance& inst) {
  if (!sys.is_full_shift()) throw usage_error("witness construction is shift-only");
  validate_instance(inst);
  int m = dyadic_exponent(inst.eps);
  if (inst.n_eps <= m)
    throw contract_error("gap bound too small for the symbol tolerance: need n_eps > " +
                         std::to_string(m));
  long long period = inst.n_eps + inst.intervals.back().second;
  ShiftWord block(static_cast<size_t>(period), 0);
  // The orbit condition over [i_r, j_r] at distance 2^-m is agreement with the
  // target on absolute positions [i_r, j_r + m]; the gap bound keeps the
  // copied stretches disjoint and inside one period.
  for (size_t r = 0; r < inst.targets.size(); ++r) {
    const auto& y = inst.targets[r].as_shift();
    for (long long i = inst.intervals[r].first; i <= inst.intervals[r].second + m; ++i)
      block[static_cast<size_t>(i)] = y.symbol(static_cast<size_t>(i));
  }
  return Point::shift({}, std::move(block));
}

bool verify_specification(const System& sys, const Point& x, const SpecInstance& inst) {
  validate_instance(inst);
  const Space sp = sys.space();
  for (size_t r = 0; r < inst.targets.size(); ++r) {
    for (long long j = inst.intervals[r].first; j <= inst.intervals[r].second; ++j)
      if (!(distance(sp, iterate(sys, x, j), iterate(sys, inst.targets[r], j)) < inst.eps))
        return false;
  }
  long long period = inst.n_eps + inst.intervals.back().second;
  return iterate(sys, x, period) == x;
}

TransferWitness project_spec_witness(const Space& sp, const System& sys, const StepFuzzySet& v,
                                     const CompactSpecInstance& inst) {
  check_interval_shape(inst.intervals, inst.n_eps, inst.targets.size());
  if (!(inst.eps > 0.0) || inst.eps > 0.5)
    throw usage_error("transfer radius must lie in (0, 1/2]");
  long long period = inst.n_eps + inst.intervals.back().second;
  if (!(zadeh_iterate(sys, v, period) == v))
    throw contract_error("fuzzy set is not exactly periodic with the instance period");

  // Walk the Zadeh orbit once, measuring the endograph gap to the image of the
  // active target wherever an interval covers the time step.
  double delta = 0.0;
  StepFuzzySet cur = v;
  long long last = inst.intervals.back().second;
  for (long long j = 0; j <= last; ++j) {
    for (size_t r = 0; r < inst.targets.size(); ++r) {
      if (j < inst.intervals[r].first || j > inst.intervals[r].second) continue;
      double d =
          d_endo(sp, cur, from_characteristic(hyper_iterate(sys, inst.targets[r], j)));
      if (!(d < inst.eps)) {
        std::ostringstream os;
        os << "iterate " << j << " outside the endograph ball: d=" << d << " eps=" << inst.eps;
        throw contract_error(os.str());
      }
      delta = std::max(delta, d);
    }
    if (j < last) cur = zadeh_image(sys, cur);
  }

  Rational mid(1, 2);
  auto it = std::lower_bound(v.levels.begin(), v.levels.end(), mid);
  Rational alpha = (it != v.levels.end() && it->to_double() <= 1.0 - delta) ? *it : mid;
  CompactSet cut = alpha_level(v, alpha);

  TransferWitness w;
  w.n = period;
  w.object = cut;
  w.alpha_used = alpha;
  for (size_t r = 0; r < inst.targets.size(); ++r)
    for (long long j = inst.intervals[r].first; j <= inst.intervals[r].second; ++j) {
      double d = hausdorff(sp, hyper_iterate(sys, cut, j), hyper_iterate(sys, inst.targets[r], j));
      w.validation.emplace_back("r" + std::to_string(r) + "_j" + std::to_string(j), d);
      if (!(d < inst.eps)) throw contract_error("projected cut failed the shadowing validation");
    }
  w.exact_periodicity = hyper_iterate(sys, cut, period) == cut;
  if (!w.exact_periodicity) throw contract_error("projected cut lost exact periodicity");
  return w;
}

}  // namespace fuzzydyn
