#include "fuzzydyn/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fuzzydyn {

ReturnSet ReturnSet::of(int horizon, std::vector<int> elems, Exactness e) {
  if (horizon < 1) throw usage_error("return set horizon must be positive");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!elems.empty() && (elems.front() < 0 || elems.back() > horizon))
    throw usage_error("return set elements must lie in [0, horizon]");
  return ReturnSet{horizon, std::move(elems), e};
}

bool ReturnSet::contains(int n) const {
  return std::binary_search(elems.begin(), elems.end(), n);
}

FamilySpec FamilySpec::infinite(long long m) {
  if (m < 1) throw usage_error("min count must be positive");
  return {Kind::Infinite, m, 0};
}
FamilySpec FamilySpec::cofinite(long long t) {
  if (t < 1) throw usage_error("tail start must be positive");
  return {Kind::Cofinite, t, 0};
}
FamilySpec FamilySpec::thick(long long l) {
  if (l < 1) throw usage_error("thick run length must be positive");
  return {Kind::Thick, l, 0};
}
FamilySpec FamilySpec::syndetic(long long g) {
  if (g < 1) throw usage_error("syndetic gap must be positive");
  return {Kind::Syndetic, g, 0};
}
FamilySpec FamilySpec::ap(long long l) {
  if (l < 1) throw usage_error("progression length must be positive");
  return {Kind::AP, l, 0};
}
FamilySpec FamilySpec::upper_banach(double theta) {
  if (!(theta > 0.0) || theta > 1.0) throw usage_error("density threshold must be in (0,1]");
  FamilySpec f{Kind::UpperBanach, 0, theta};
  return f;
}

FamilySpec FamilySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw usage_error("family spec needs keyword:parameter");
  std::string kw = text.substr(0, colon);
  std::string par = text.substr(colon + 1);
  if (kw == "infinite") return infinite(std::stoll(par));
  if (kw == "cofinite") return cofinite(std::stoll(par));
  if (kw == "thick") return thick(std::stoll(par));
  if (kw == "syndetic") return syndetic(std::stoll(par));
  if (kw == "ap") return ap(std::stoll(par));
  if (kw == "ubd") return upper_banach(std::stod(par));
  throw usage_error("unknown family keyword: " + kw);
}

std::string FamilySpec::str() const {
  switch (kind) {
    case Kind::Infinite: return "infinite:" + std::to_string(param);
    case Kind::Cofinite: return "cofinite:" + std::to_string(param);
    case Kind::Thick: return "thick:" + std::to_string(param);
    case Kind::Syndetic: return "syndetic:" + std::to_string(param);
    case Kind::AP: return "ap:" + std::to_string(param);
    default: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "ubd:%g", threshold);
      return buf;
    }
  }
}

namespace {

std::string window_note(const ReturnSet& r) {
  std::string note = "verdict on the truncated window [0," + std::to_string(r.horizon) + "]";
  if (r.exactness == ReturnSet::Exactness::SoundPositives)
    note += "; memberships are sound positives from witness search";
  return note;
}

// Longest arithmetic progression detection by dynamic programming over
// difference classes: len[d][x] = 1 + len[d][x-d].
bool find_ap(const ReturnSet& r, long long l, long long* start, long long* diff) {
  const auto& e = r.elems;
  if (e.empty()) return false;
  if (l == 0) {
    *start = e.front();
    *diff = 1;
    return true;
  }
  std::vector<char> in(static_cast<size_t>(r.horizon) + 1, 0);
  for (int x : e) in[x] = 1;
  for (long long d = 1; d * l <= r.horizon; ++d) {
    std::vector<int> len(static_cast<size_t>(r.horizon) + 1, 0);
    for (int x : e) {
      len[x] = (x >= d && in[x - d]) ? len[x - d] + 1 : 1;
      if (len[x] >= l + 1) {
        *diff = d;
        *start = x - d * l;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

FamilyVerdict member(const FamilySpec& fam, const ReturnSet& r) {
  FamilyVerdict v;
  v.truncation_note = window_note(r);
  const auto& e = r.elems;
  switch (fam.kind) {
    case FamilySpec::Kind::Infinite: {
      v.holds = static_cast<long long>(e.size()) >= fam.param;
      v.certificate = {"count", static_cast<long long>(e.size()), fam.param, 0, 0.0};
      return v;
    }
    case FamilySpec::Kind::Cofinite: {
      if (fam.param > r.horizon) throw usage_error("cofinite tail beyond the horizon");
      for (long long n = fam.param; n <= r.horizon; ++n)
        if (!r.contains(static_cast<int>(n))) {
          v.holds = false;
          v.certificate = {"gap", n, n, 0, 0.0};
          return v;
        }
      v.holds = true;
      v.certificate = {"tail", fam.param, r.horizon, 0, 0.0};
      return v;
    }
    case FamilySpec::Kind::Thick: {
      if (fam.param > r.horizon) throw usage_error("thick run beyond the horizon");
      long long run = 0, run_start = 0;
      long long best = -1, best_start = 0;
      for (long long n = 0; n <= r.horizon; ++n) {
        if (r.contains(static_cast<int>(n))) {
          if (run == 0) run_start = n;
          ++run;
          if (run > best) {
            best = run;
            best_start = run_start;
          }
        } else {
          run = 0;
        }
      }
      if (best >= fam.param + 1) {
        v.holds = true;
        v.certificate = {"run", best_start, fam.param, 0, 0.0};
      } else {
        v.holds = false;
        v.certificate = {"count", best, fam.param + 1, 0, 0.0};
      }
      return v;
    }
    case FamilySpec::Kind::Syndetic: {
      if (fam.param > r.horizon) throw usage_error("syndetic gap beyond the horizon");
      for (long long m = 0; m + fam.param <= r.horizon; ++m) {
        auto it = std::lower_bound(e.begin(), e.end(), static_cast<int>(m));
        if (it == e.end() || *it > m + fam.param) {
          v.holds = false;
          v.certificate = {"gap", m, m + fam.param, 0, 0.0};
          return v;
        }
        // Every window starting in (m, *it] also contains *it; skip ahead.
        m = *it;
      }
      v.holds = true;
      v.certificate = {"window", fam.param, 0, 0, 0.0};
      return v;
    }
    case FamilySpec::Kind::AP: {
      long long start = 0, diff = 0;
      if (find_ap(r, fam.param, &start, &diff)) {
        v.holds = true;
        v.certificate = {"ap", start, diff, fam.param + 1, 0.0};
      } else {
        v.holds = false;
        v.certificate = {"none", 0, 0, 0, 0.0};
      }
      return v;
    }
    default: {
      int min_window = std::max(1, r.horizon / 4);
      double dens = upper_banach_density(r, min_window);
      v.holds = dens >= fam.threshold;
      v.certificate = {"window_density", min_window, 0, 0, dens};
      return v;
    }
  }
}

bool validate_certificate(const FamilySpec& fam, const ReturnSet& r, const FamilyCertificate& c) {
  switch (fam.kind) {
    case FamilySpec::Kind::Infinite:
      return static_cast<long long>(r.elems.size()) == c.a;
    case FamilySpec::Kind::Cofinite:
      if (c.kind == "tail") {
        for (long long n = c.a; n <= c.b; ++n)
          if (!r.contains(static_cast<int>(n))) return false;
        return true;
      }
      return c.kind == "gap" && !r.contains(static_cast<int>(c.a));
    case FamilySpec::Kind::Thick:
      if (c.kind == "run") {
        for (long long n = c.a; n <= c.a + c.b; ++n)
          if (!r.contains(static_cast<int>(n))) return false;
        return true;
      }
      return true;  // negative certificate is a run-length bound
    case FamilySpec::Kind::Syndetic:
      if (c.kind == "gap") {
        for (long long n = c.a; n <= c.b; ++n)
          if (r.contains(static_cast<int>(n))) return false;
        return true;
      }
      return member(fam, r).holds;
    case FamilySpec::Kind::AP:
      if (c.kind == "ap") {
        for (long long j = 0; j < c.c; ++j)
          if (!r.contains(static_cast<int>(c.a + j * c.b))) return false;
        return true;
      }
      return true;
    default:
      return std::fabs(upper_banach_density(r, static_cast<int>(c.a)) - c.value) < 1e-12;
  }
}

double upper_banach_density(const ReturnSet& r, int min_window) {
  if (min_window < 1 || min_window > r.horizon)
    throw usage_error("window bound outside [1, horizon]");
  std::vector<int> prefix(static_cast<size_t>(r.horizon) + 2, 0);
  for (int n = 0; n <= r.horizon; ++n)
    prefix[n + 1] = prefix[n] + (r.contains(n) ? 1 : 0);
  double best = 0.0;
  for (int w = min_window; w <= r.horizon; ++w) {
    for (int m = 0; m + w <= r.horizon; ++m) {
      int cnt = prefix[m + w + 1] - prefix[m];
      best = std::max(best, static_cast<double>(cnt) / (w + 1));
    }
  }
  return best;
}

BlockWitnessResult block_witness_check(const ReturnSet& a_window, const ReturnSet& b_window,
                                       const std::vector<std::vector<int>>& f_list) {
  BlockWitnessResult res;
  for (const auto& f : f_list) {
    if (f.empty()) throw usage_error("blocks must be non-empty");
    int fmax = *std::max_element(f.begin(), f.end());
    for (int x : f)
      if (!a_window.contains(x)) throw usage_error("block not contained in the source window");
    long long found = -1;
    for (int n = 0; n + fmax <= b_window.horizon; ++n) {
      bool ok = true;
      for (int x : f)
        if (!b_window.contains(x + n)) {
          ok = false;
          break;
        }
      if (ok) {
        found = n;
        break;
      }
    }
    if (found < 0) {
      res.holds = false;
      return res;
    }
    res.translations.push_back(found);
  }
  res.holds = true;
  return res;
}

}  // namespace fuzzydyn
