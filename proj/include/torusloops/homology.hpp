#pragma once

#include "torusloops/param.hpp"

#include <array>
#include <string>

namespace torusloops {

enum class Basis { BFE, LV };

// Coefficients are always stored in the B, F, E1..E4 basis; LV is a view.
struct H2Class {
  std::array<long, 6> v{};

  static H2Class B() { return {{1, 0, 0, 0, 0, 0}}; }
  static H2Class F() { return {{0, 1, 0, 0, 0, 0}}; }
  static H2Class E(int i);  // i in 1..4
  static H2Class unit(int idx);  // basis vector number idx in 0..5

  long b() const { return v[0]; }
  long f() const { return v[1]; }
  long e(int i) const { return v[i + 1]; }

  H2Class& operator+=(const H2Class& o);
  H2Class& operator-=(const H2Class& o);
  friend H2Class operator+(H2Class a, const H2Class& b) { return a += b; }
  friend H2Class operator-(H2Class a, const H2Class& b) { return a -= b; }
  friend H2Class operator*(long k, H2Class a) {
    for (auto& x : a.v) x *= k;
    return a;
  }
  H2Class operator-() const { return -1 * *this; }
  bool operator==(const H2Class&) const = default;
  auto operator<=>(const H2Class&) const = default;
  bool is_zero() const { return *this == H2Class{}; }
};

// 2B + 2F - E1 - E2 - E3 - E4
H2Class canonical_class();

long intersect(const H2Class& a, const H2Class& b);
long chern(const H2Class& a);
ParamForm area(const H2Class& a);
Rational area(const H2Class& a, const ParamPoint& p);

// L = B+F-E1, V1 = B-E1, V2 = F-E1, V_{i+1} = E_i (i = 2..4)
std::array<long, 6> to_lv(const H2Class& a);
H2Class from_lv(const std::array<long, 6>& lv);
H2Class lv_line();
H2Class lv_exceptional(int j);  // j in 1..5

// "B + F - E1 - E2"
std::string to_string(const H2Class& a);
std::string to_string_lv(const H2Class& a);
H2Class parse_class(std::string_view s);

struct CohomClassParams {
  Rational nu;
  std::array<Rational, 5> delta;
};

bool is_reduced(const CohomClassParams& c);
// Throws std::invalid_argument with the failing inequality for non-reduced input.
ParamPoint to_blowup_params(const CohomClassParams& c);

}  // namespace torusloops
