#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fuzzydyn {

// Seeded random source with platform-independent derived draws. The standard
// distributions are implementation-defined, so every draw here goes through
// explicit arithmetic on the raw engine output.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0, n).
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Uniform double in [0, 1).
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool coin(double p = 0.5) { return unit() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace fuzzydyn
