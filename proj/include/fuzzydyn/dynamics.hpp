#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fuzzydyn/fuzzy.hpp"
#include "fuzzydyn/space.hpp"

namespace fuzzydyn {

struct System;

// Total transition table on a finite labeled metric space.
struct FiniteMapSystem {
  Space space;
  std::vector<int> table;
};

// Left shift on the full one-sided shift over k symbols.
struct FullShiftSystem {
  int alphabet = 2;
};

// Rotation by a fixed-point angle; the default angle approximates the golden
// ratio fractional part to the space's precision.
struct CircleRotationSystem {
  int precision_bits = 64;
  uint64_t angle = 0;
};

struct ProductSystem {
  std::shared_ptr<const System> base;
  int copies = 2;
};

struct System {
  std::variant<FiniteMapSystem, FullShiftSystem, CircleRotationSystem, ProductSystem> desc;

  static System finite_map(Space space, std::vector<int> table);
  static System full_shift(int alphabet);
  static System circle_rotation(int precision_bits, uint64_t angle);
  static System golden_rotation(int precision_bits);
  // copies = 1 is identified with the base system.
  static System product(const System& base, int copies);

  bool is_finite_map() const { return std::holds_alternative<FiniteMapSystem>(desc); }
  bool is_full_shift() const { return std::holds_alternative<FullShiftSystem>(desc); }
  bool is_rotation() const { return std::holds_alternative<CircleRotationSystem>(desc); }
  bool is_product() const { return std::holds_alternative<ProductSystem>(desc); }

  const FiniteMapSystem& finite_map_desc() const { return std::get<FiniteMapSystem>(desc); }
  const FullShiftSystem& full_shift_desc() const { return std::get<FullShiftSystem>(desc); }
  const CircleRotationSystem& rotation_desc() const { return std::get<CircleRotationSystem>(desc); }
  const ProductSystem& product_desc() const { return std::get<ProductSystem>(desc); }

  Space space() const;
  std::string kind_name() const;
};

// floor(((sqrt(5)-1)/2) * 2^bits), the canonical irrational angle, computed
// exactly from a pair of bracketing Fibonacci convergents.
uint64_t golden_angle(int bits);

Point step(const System& sys, const Point& p);
Point iterate(const System& sys, const Point& p, long long n);

// Elementwise image of a compact set (the hyperspace extension applied once).
CompactSet hyper_image(const System& sys, const CompactSet& k);
CompactSet hyper_iterate(const System& sys, const CompactSet& k, long long n);

// Zadeh extension, computed level-wise: the cut of the image is the image of
// the cut. On shift spaces preimages are infinite but level images stay
// finite and exact, so this is the only exact route.
StepFuzzySet zadeh_image(const System& sys, const StepFuzzySet& u);
StepFuzzySet zadeh_iterate(const System& sys, const StepFuzzySet& u, long long n);

// ---------------------------------------------------------------------------
// Open-set bases at a finite resolution
// ---------------------------------------------------------------------------

struct MetricBall {
  Point center;
  double radius = 0.0;  // open ball
};

// Cylinder [w]: all sequences starting with w; membership is an exact symbol
// comparison on eventually periodic points.
struct CylinderBall {
  ShiftWord word;
};

struct ProductBall;

struct BaseBall {
  std::variant<MetricBall, CylinderBall, std::shared_ptr<ProductBall>> rep;
};

struct ProductBall {
  std::vector<BaseBall> comps;
};

struct BasisElement {
  std::string name;
  BaseBall ball;
};

bool ball_contains(const Space& sp, const BaseBall& ball, const Point& p);

// Finite open basis covering the space at the stated resolution: cylinders up
// to the given word length on shifts, arcs of width 1/resolution on the
// circle, singleton balls on finite spaces, componentwise products.
std::vector<BasisElement> basis(const System& sys, int resolution);

// Representative point inside a basis element (cylinder -> w^inf).
Point ball_representative(const Space& sp, const BaseBall& ball);

// Nominal radius of the element (2^-|w| for cylinders).
double ball_radius(const Space& sp, const BaseBall& ball);

// Eventually periodic point whose cycle is a de Bruijn sequence of order
// `length`, so its orbit visits every cylinder of that length and shorter.
Point de_bruijn_point(int alphabet, int length);

}  // namespace fuzzydyn
