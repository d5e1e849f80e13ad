#pragma once

#include "torusloops/karshon.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

namespace tl_test {

using namespace torusloops;

inline ParamForm f(const std::string& s) { return parse_param_form(s); }
inline Rational r(const std::string& s) { return parse_rational(s); }

struct Fat {
  std::string moment, area, cls;  // cls empty: unlabeled
};
struct Edge {
  std::string lo, hi;
  int w;
};

// A graph written down label by label.
inline KarshonGraph drawn(const std::vector<Fat>& fat, const std::vector<std::string>& fixed,
                          const std::vector<Edge>& edges) {
  KarshonGraph G;
  for (const auto& v : fat)
    G.fat.push_back({f(v.moment), f(v.area), 0,
                     v.cls.empty() ? std::nullopt : std::optional<H2Class>(parse_class(v.cls))});
  for (const auto& x : fixed) G.fixed.push_back(f(x));
  for (const auto& e : edges) G.edges.push_back({f(e.lo), f(e.hi), e.w});
  return G;
}

// Reduced points strictly inside the chamber where every catalog polytope is valid.
inline std::vector<ParamPoint> seeded_generic_points(unsigned seed, int count) {
  std::mt19937 gen(seed);
  std::vector<ParamPoint> out;
  while (static_cast<int>(out.size()) < count) {
    std::uniform_int_distribution<int> d(1, 99);
    std::vector<int> c = {d(gen), d(gen), d(gen), d(gen)};
    std::sort(c.begin(), c.end(), std::greater<int>());
    int mu = std::uniform_int_distribution<int>(101, 600)(gen);
    ParamPoint p = make_point(rat(mu, 100), rat(c[0], 100), rat(c[1], 100), rat(c[2], 100), rat(c[3], 100));
    if (!is_generic_point(p) || p.mu <= 2 + p.c[0]) continue;
    bool valid = true;
    for (const auto& e : catalog_instances()) valid = valid && check_delzant(e.polytope, p).ok;
    if (valid) out.push_back(p);
  }
  return out;
}

}  // namespace tl_test
