#include "torusloops/homology.hpp"

#include <cctype>
#include <stdexcept>

namespace torusloops {

H2Class H2Class::E(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("E index");
  return unit(i + 1);
}

H2Class H2Class::unit(int idx) {
  H2Class a;
  a.v.at(idx) = 1;
  return a;
}

H2Class& H2Class::operator+=(const H2Class& o) {
  for (int i = 0; i < 6; ++i) v[i] += o.v[i];
  return *this;
}

H2Class& H2Class::operator-=(const H2Class& o) {
  for (int i = 0; i < 6; ++i) v[i] -= o.v[i];
  return *this;
}

H2Class canonical_class() { return {{2, 2, -1, -1, -1, -1}}; }

long intersect(const H2Class& a, const H2Class& b) {
  long r = a.v[0] * b.v[1] + a.v[1] * b.v[0];
  for (int i = 2; i < 6; ++i) r -= a.v[i] * b.v[i];
  return r;
}

long chern(const H2Class& a) { return intersect(canonical_class(), a); }

ParamForm area(const H2Class& a) {
  return ParamForm(a.f(), a.b(), {a.e(1), a.e(2), a.e(3), a.e(4)});
}

Rational area(const H2Class& a, const ParamPoint& p) { return area(a).eval(p); }

std::array<long, 6> to_lv(const H2Class& a) {
  long b = a.b(), f = a.f(), e1 = a.e(1);
  return {b + f + e1, -(f + e1), -(b + e1), a.e(2), a.e(3), a.e(4)};
}

H2Class from_lv(const std::array<long, 6>& lv) {
  // B = L - V2, F = L - V1, E1 = L - V1 - V2
  long l = lv[0], v1 = lv[1], v2 = lv[2];
  return {{l + v1, l + v2, -(l + v1 + v2), lv[3], lv[4], lv[5]}};
}

H2Class lv_line() { return from_lv({1, 0, 0, 0, 0, 0}); }

H2Class lv_exceptional(int j) {
  if (j < 1 || j > 5) throw std::out_of_range("V index");
  std::array<long, 6> lv{};
  lv[j] = 1;
  return from_lv(lv);
}

namespace {

std::string render(const std::array<long, 6>& v, const char* const names[6]) {
  std::string out;
  for (int i = 0; i < 6; ++i) {
    long x = v[i];
    if (x == 0) continue;
    long m = x < 0 ? -x : x;
    std::string body = (m == 1 ? "" : std::to_string(m)) + names[i];
    if (out.empty())
      out = (x < 0 ? "-" : "") + body;
    else
      out += (x < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const H2Class& a) {
  static const char* const names[6] = {"B", "F", "E1", "E2", "E3", "E4"};
  return render(a.v, names);
}

std::string to_string_lv(const H2Class& a) {
  static const char* const names[6] = {"L", "V1", "V2", "V3", "V4", "V5"};
  return render(to_lv(a), names);
}

H2Class parse_class(std::string_view sv) {
  std::string s;
  for (char ch : sv)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty class");
  if (s == "0") return {};
  H2Class a;
  std::size_t i = 0;
  while (i < s.size()) {
    long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i > 0) {
      throw std::invalid_argument("malformed class: " + std::string(sv));
    }
    long k = 0;
    bool digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      k = 10 * k + (s[i++] - '0');
      digits = true;
    }
    if (!digits) k = 1;
    if (i < s.size() && s[i] == '*') ++i;
    if (i >= s.size()) throw std::invalid_argument("malformed class: " + std::string(sv));
    int idx = -1;
    if (s[i] == 'B') {
      idx = 0;
      ++i;
    } else if (s[i] == 'F') {
      idx = 1;
      ++i;
    } else if (s[i] == 'E' && i + 1 < s.size() && s[i + 1] >= '1' && s[i + 1] <= '4') {
      idx = s[i + 1] - '0' + 1;
      i += 2;
    } else {
      throw std::invalid_argument("malformed class: " + std::string(sv));
    }
    a.v[idx] += sign * k;
  }
  return a;
}

bool is_reduced(const CohomClassParams& c) {
  const auto& d = c.delta;
  if (!(c.nu > d[0])) return false;
  for (int i = 0; i + 1 < 5; ++i)
    if (d[i] < d[i + 1]) return false;
  if (sgn(d[4]) <= 0) return false;
  // the largest triple sum is d1 + d2 + d3 once sorted
  return c.nu >= d[0] + d[1] + d[2];
}

ParamPoint to_blowup_params(const CohomClassParams& c) {
  const auto& d = c.delta;
  if (!(c.nu > d[0])) throw std::invalid_argument("not reduced: nu <= delta1");
  for (int i = 0; i + 1 < 5; ++i)
    if (d[i] < d[i + 1])
      throw std::invalid_argument("not reduced: delta" + std::to_string(i + 1) + " < delta" +
                                  std::to_string(i + 2));
  if (sgn(d[4]) <= 0) throw std::invalid_argument("not reduced: delta5 <= 0");
  if (c.nu < d[0] + d[1] + d[2])
    throw std::invalid_argument("not reduced: nu < delta1 + delta2 + delta3");
  Rational s = c.nu - d[0];
  ParamPoint p;
  p.mu = (c.nu - d[1]) / s;
  p.c[0] = (c.nu - d[0] - d[1]) / s;
  for (int i = 1; i < 4; ++i) p.c[i] = d[i + 1] / s;
  return p;
}

}  // namespace torusloops
