#include "torusloops/param.hpp"

#include <cctype>
#include <stdexcept>

namespace torusloops {

Rational parse_rational(std::string_view s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto bad = [&] { return std::invalid_argument("malformed rational: " + std::string(s)); };
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    if (t.find('/') != std::string::npos) throw bad();
    std::string whole = t.substr(0, dot), frac = t.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    for (char ch : whole + frac)
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(Integer(whole + frac, 10), den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  auto digits = [](const std::string& x, bool sign) {
    std::size_t i = (sign && !x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
    return true;
  };
  if (!digits(num, true) || !digits(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  Rational r(Integer(num, 10), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

ParamPoint make_point(const Rational& mu, const Rational& c1, const Rational& c2,
                      const Rational& c3, const Rational& c4) {
  return ParamPoint{mu, {c1, c2, c3, c4}};
}

ParamPoint ma_point(const Rational& mu) {
  Rational h = rat(1, 2);
  return make_point(mu, h, h, h, h);
}

ParamPoint ma2() { return ma_point(2); }

ParamPoint generic_point() {
  return make_point(7, rat(9, 20), rat(37, 100), rat(29, 100), rat(9, 50));
}

bool is_reduced_point(const ParamPoint& p) {
  const auto& c = p.c;
  if (!(sgn(c[3]) > 0 && c[3] <= c[2] && c[2] <= c[1] && c[1] <= c[0] && c[0] <= 1 &&
        1 <= p.mu))
    return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (c[i] + c[j] > 1) return false;
  return true;
}

bool is_generic_point(const ParamPoint& p) {
  const auto& c = p.c;
  if (!(sgn(c[3]) > 0 && c[3] < c[2] && c[2] < c[1] && c[1] < c[0] && c[0] < 1 && 1 < p.mu))
    return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (c[i] + c[j] >= 1) return false;
  return true;
}

std::string to_string(const ParamPoint& p) {
  std::string s = "(mu=" + to_string(p.mu) + "; c=";
  for (int i = 0; i < 4; ++i) s += (i ? "," : "") + to_string(p.c[i]);
  return s + ")";
}

}  // namespace torusloops
