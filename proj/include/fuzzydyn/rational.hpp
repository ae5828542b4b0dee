#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "fuzzydyn/errors.hpp"

namespace fuzzydyn {

// Exact rational with 64-bit components, always normalized (den > 0, reduced).
// Membership levels are stored as rationals so half-open interval lookups and
// breakpoint merging never hit floating ties.
struct Rational {
  long long num = 0;
  long long den = 1;

  constexpr Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw usage_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "a", "a/b" and plain decimals such as "0.125".
  static Rational parse(std::string_view s);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num) * b.den;
    __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }

  static Rational midpoint(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, 2 * a.den * b.den);
  }
};

inline Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw usage_error("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    long long n = std::stoll(std::string(s.substr(0, slash)));
    long long d = std::stoll(std::string(s.substr(slash + 1)));
    return Rational(n, d);
  }
  auto dot = s.find('.');
  if (dot != std::string_view::npos) {
    std::string_view intpart = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (frac.size() > 15) throw usage_error("decimal literal too long: " + std::string(s));
    long long den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    long long whole = intpart.empty() ? 0 : std::stoll(std::string(intpart));
    long long fracval = frac.empty() ? 0 : std::stoll(std::string(frac));
    bool neg = !intpart.empty() && intpart[0] == '-';
    long long n = whole * den + (neg ? -fracval : fracval);
    return Rational(n, den);
  }
  return Rational(std::stoll(std::string(s)));
}

}  // namespace fuzzydyn
