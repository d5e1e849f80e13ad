#pragma once

#include "torusloops/rational.hpp"

#include <compare>
#include <string>

namespace torusloops {

// a0 + a_mu * mu + sum a_i * c_i
class ParamForm {
 public:
  ParamForm() = default;
  explicit ParamForm(const Rational& k) : k_(k) {}
  ParamForm(const Rational& k, const Rational& mu, const std::array<Rational, 4>& c)
      : k_(k), mu_(mu), c_(c) {}

  static ParamForm mu() { return ParamForm(0, 1, {}); }
  static ParamForm c(int i);  // i in 1..4

  const Rational& constant() const { return k_; }
  const Rational& mu_coeff() const { return mu_; }
  const Rational& c_coeff(int i) const { return c_[i - 1]; }
  const std::array<Rational, 4>& c_coeffs() const { return c_; }

  Rational eval(const ParamPoint& p) const;
  bool positive_at(const ParamPoint& p) const { return sgn(eval(p)) > 0; }
  bool is_zero() const;
  bool is_constant() const;

  ParamForm& operator+=(const ParamForm& o);
  ParamForm& operator-=(const ParamForm& o);
  ParamForm& operator*=(const Rational& s);
  friend ParamForm operator+(ParamForm a, const ParamForm& b) { return a += b; }
  friend ParamForm operator-(ParamForm a, const ParamForm& b) { return a -= b; }
  friend ParamForm operator*(ParamForm a, const Rational& s) { return a *= s; }
  friend ParamForm operator*(const Rational& s, ParamForm a) { return a *= s; }
  ParamForm operator-() const { return *this * Rational(-1); }

  bool operator==(const ParamForm& o) const;
  // structural order on coefficients; not the order of values
  bool operator<(const ParamForm& o) const;

 private:
  Rational k_, mu_;
  std::array<Rational, 4> c_{};
};

Rational pf_eval(const ParamForm& f, const ParamPoint& p);
bool pf_positive_at(const ParamForm& f, const ParamPoint& p);

// "mu - c1 - c2 + 1/2"
std::string to_string(const ParamForm& f);
ParamForm parse_param_form(std::string_view s);

// Orders by value at p, ties broken structurally, so that sorting is total.
struct ValueOrder {
  const ParamPoint* p;
  bool operator()(const ParamForm& a, const ParamForm& b) const {
    int s = cmp(a.eval(*p), b.eval(*p));
    if (s != 0) return s < 0;
    return a < b;
  }
};

}  // namespace torusloops
