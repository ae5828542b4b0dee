#include <cmath>
#include <sstream>

#include "fuzzydyn/analysis.hpp"

namespace fuzzydyn {

namespace {

void require_small_eps(double eps) {
  if (!(eps > 0.0) || eps > 0.5)
    throw usage_error("transfer radius must lie in (0, 1/2]");
}

// Midpoint of the admissible cut interval (delta, 1-delta] is 1/2; when 1/2
// falls between breakpoints the cut there equals the one at the next
// breakpoint up, so snapping up preserves the level set. Falls back to the
// plain midpoint when that breakpoint leaves the interval.
Rational choose_alpha(const StepFuzzySet& u, double delta) {
  Rational mid(1, 2);
  auto it = std::lower_bound(u.levels.begin(), u.levels.end(), mid);
  if (it != u.levels.end() && it->to_double() <= 1.0 - delta) return *it;
  return mid;
}

std::string measured(const std::vector<std::pair<std::string, double>>& vals) {
  std::ostringstream os;
  for (const auto& [k, v] : vals) os << " " << k << "=" << v;
  return os.str();
}

}  // namespace

TransferWitness project_transitivity_witness(const Space& sp, const System& sys,
                                             const CompactSet& k, const CompactSet& l, double eps,
                                             long long n, const StepFuzzySet& u) {
  require_small_eps(eps);
  double d_src = d_endo(sp, from_characteristic(k), u);
  double d_dst = d_endo(sp, from_characteristic(l), zadeh_iterate(sys, u, n));
  if (!(d_src < eps) || !(d_dst < eps))
    throw contract_error("fuzzy witness outside the endograph balls:" +
                         measured({{"d_src", d_src}, {"d_dst", d_dst}, {"eps", eps}}));
  double delta = std::max(d_src, d_dst);
  Rational alpha = choose_alpha(u, delta);
  CompactSet cut = alpha_level(u, alpha);

  TransferWitness w;
  w.n = n;
  w.object = cut;
  w.alpha_used = alpha;
  double v1 = hausdorff(sp, k, cut);
  double v2 = hausdorff(sp, l, hyper_iterate(sys, cut, n));
  w.validation = {{"hausdorff_source", v1}, {"hausdorff_image", v2}};
  if (!(v1 < eps) || !(v2 < eps))
    throw contract_error("projected cut failed validation:" + measured(w.validation));
  return w;
}

TransferWitness lift_transitivity_witness(const Space& sp, const System& sys,
                                          const StepFuzzySet& u, const StepFuzzySet& v, double eps,
                                          long long n,
                                          const std::vector<std::pair<Rational, CompactSet>>&
                                              level_witnesses) {
  if (!(eps > 0.0)) throw usage_error("transfer radius must be positive");
  auto q = quantize(sp, u, eps / 2.0);
  if (q.breakpoints.size() != level_witnesses.size())
    throw contract_error("level witnesses must match the quantized breakpoints");
  for (size_t j = 0; j < level_witnesses.size(); ++j) {
    if (!(level_witnesses[j].first == q.breakpoints[j]))
      throw contract_error("level witness breakpoint mismatch at index " + std::to_string(j));
    double du = hausdorff(sp, alpha_level(u, q.breakpoints[j]), level_witnesses[j].second);
    double dv = hausdorff(sp, alpha_level(v, q.breakpoints[j]),
                          hyper_iterate(sys, level_witnesses[j].second, n));
    if (!(du < eps / 2.0) || !(dv < eps / 2.0))
      throw contract_error("level witness outside its half-radius ball:" +
                           measured({{"d_level", du}, {"d_image", dv}, {"eps/2", eps / 2.0}}));
  }
  StepFuzzySet lifted = from_max_combination(level_witnesses);

  TransferWitness w;
  w.n = n;
  double v1 = d_inf(sp, u, lifted);
  double v2 = d_inf(sp, v, zadeh_iterate(sys, lifted, n));
  w.validation = {{"d_inf_source", v1}, {"d_inf_image", v2}};
  w.object = std::move(lifted);
  if (!(v1 < eps) || !(v2 < eps))
    throw contract_error("lifted witness failed validation:" + measured(w.validation));
  return w;
}

TransferWitness project_recurrence_witness(const Space& sp, const System& sys, const CompactSet& k,
                                           double eps, long long n, int ell,
                                           const StepFuzzySet& u) {
  require_small_eps(eps);
  if (ell < 1) throw usage_error("ell must be positive");
  StepFuzzySet chi = from_characteristic(k);
  double delta = 0.0;
  StepFuzzySet cur = u;
  for (int j = 0; j <= ell; ++j) {
    double d = d_endo(sp, chi, cur);
    if (!(d < eps))
      throw contract_error("iterate " + std::to_string(j) +
                           " outside the endograph ball:" + measured({{"d", d}, {"eps", eps}}));
    delta = std::max(delta, d);
    if (j < ell) cur = zadeh_iterate(sys, cur, n);
  }
  Rational alpha = choose_alpha(u, delta);
  CompactSet cut = alpha_level(u, alpha);

  TransferWitness w;
  w.n = n;
  w.object = cut;
  w.alpha_used = alpha;
  for (int j = 0; j <= ell; ++j) {
    double d = hausdorff(sp, k, hyper_iterate(sys, cut, static_cast<long long>(j) * n));
    w.validation.emplace_back("hausdorff_j" + std::to_string(j), d);
    if (!(d < eps))
      throw contract_error("projected cut failed validation:" + measured(w.validation));
  }
  return w;
}

TransferWitness project_periodic(const Space& sp, const System& sys, const CompactSet& k,
                                 double eps, const StepFuzzySet& u, long long p) {
  require_small_eps(eps);
  if (p < 1) throw usage_error("period must be positive");
  if (!(zadeh_iterate(sys, u, p) == u))
    throw contract_error("fuzzy set is not exactly periodic with the stated period");
  double delta = d_endo(sp, from_characteristic(k), u);
  if (!(delta < eps))
    throw contract_error("periodic fuzzy set outside the endograph ball:" +
                         measured({{"d", delta}, {"eps", eps}}));
  Rational alpha = choose_alpha(u, delta);
  CompactSet cut = alpha_level(u, alpha);

  TransferWitness w;
  w.n = p;
  w.object = cut;
  w.alpha_used = alpha;
  double v1 = hausdorff(sp, k, cut);
  w.validation = {{"hausdorff", v1}};
  w.exact_periodicity = hyper_iterate(sys, cut, p) == cut;
  if (!(v1 < eps) || !w.exact_periodicity)
    throw contract_error("projected cut failed validation:" + measured(w.validation));
  return w;
}

CompactSet periodic_near(const System& sys, const CompactSet& k, double eps) {
  if (!sys.is_full_shift()) throw usage_error("periodic approximation is shift-only");
  if (!(eps > 0.0)) throw usage_error("radius must be positive");
  int level = static_cast<int>(std::lround(-std::log2(eps)));
  if (std::ldexp(1.0, -level) != eps) throw usage_error("radius must be a power of two");
  std::vector<Point> pts;
  for (const auto& p : k.points()) {
    ShiftWord w;
    for (int i = 0; i <= level; ++i) w.push_back(p.as_shift().symbol(static_cast<size_t>(i)));
    pts.push_back(Point::shift({}, std::move(w)));
  }
  return CompactSet::of(std::move(pts));
}

}  // namespace fuzzydyn
