#pragma once

#include "torusloops/param.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torusloops {

// Exponents are plain rationals.
struct RationalExponents {
  using exponent = Rational;
  Rational value(const Rational& e) const { return e; }
  Rational lift(const ParamForm& f, const ParamPoint& p) const { return f.eval(p); }
  static std::string show(const Rational& e) { return to_string(e); }
  bool operator==(const RationalExponents&) const = default;
};

// Exponents are affine forms in (mu, c); truncation and ordering use their values at `order`.
struct FormExponents {
  using exponent = ParamForm;
  ParamPoint order;
  Rational value(const ParamForm& e) const { return e.eval(order); }
  ParamForm lift(const ParamForm& f, const ParamPoint&) const { return f; }
  static std::string show(const ParamForm& e) { return to_string(e); }
  bool operator==(const FormExponents&) const = default;
};

// Truncated generalized Laurent series sum r_k t^k. Terms with value below `floor` are
// dropped; `valid` records the value above which every kept coefficient is exact
// (nullopt: nothing was ever dropped).
template <class Policy>
class Series {
 public:
  using Exp = typename Policy::exponent;

  Series(Policy pol, Rational floor) : pol_(std::move(pol)), floor_(std::move(floor)) {}

  static Series monomial(Policy pol, Rational floor, const Exp& e, const Rational& coef = 1) {
    Series s(std::move(pol), std::move(floor));
    s.add_term(e, coef);
    s.truncate();
    return s;
  }

  const Policy& policy() const { return pol_; }
  const Rational& floor() const { return floor_; }
  const std::optional<Rational>& valid() const { return valid_; }
  const std::map<Exp, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational value(const Exp& e) const { return pol_.value(e); }

  Rational coef(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::optional<Rational> top_value() const {
    std::optional<Rational> top;
    for (const auto& [e, c] : terms_) {
      Rational v = pol_.value(e);
      if (!top || v > *top) top = v;
    }
    return top;
  }

  // Terms sorted by decreasing value.
  std::vector<std::pair<Exp, Rational>> descending() const {
    std::vector<std::pair<Exp, Rational>> out(terms_.begin(), terms_.end());
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      return pol_.value(a.first) > pol_.value(b.first);
    });
    return out;
  }

  void add_term(const Exp& e, const Rational& c) {
    if (sgn(c) == 0) return;
    Rational& x = terms_[e];
    x += c;
    if (sgn(x) == 0) terms_.erase(e);
  }

  Series& operator+=(const Series& o) {
    merge_bounds(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    truncate();
    return *this;
  }
  Series& operator-=(const Series& o) {
    merge_bounds(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    truncate();
    return *this;
  }
  Series& operator*=(const Rational& k) {
    if (sgn(k) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& k) { return a *= k; }
  friend Series operator*(const Rational& k, Series a) { return a *= k; }
  Series operator-() const { return *this * Rational(-1); }

  // Multiplication by t^e.
  Series shifted(const Exp& e) const {
    Series out(pol_, floor_);
    for (const auto& [x, c] : terms_) out.terms_[x + e] = c;
    if (valid_) out.valid_ = *valid_ + pol_.value(e);
    out.truncate();
    return out;
  }

  friend Series operator*(const Series& a, const Series& b) {
    Series out(a.pol_, max_of(a.floor_, b.floor_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e = ea + eb;
        if (out.pol_.value(e) < out.floor_) {
          out.note_drop();
          continue;
        }
        out.add_term(e, ca * cb);
      }
    // errors of a factor propagate through the leading term of the other one
    auto ta = a.top_value(), tb = b.top_value();
    auto bound = [&](const std::optional<Rational>& v, const std::optional<Rational>& top,
                     const std::optional<Rational>& v2) {
      if (!v) return;
      if (top) out.raise_valid(*v + *top);
      if (v2) out.raise_valid(*v + *v2);
    };
    bound(a.valid_, tb, b.valid_);
    bound(b.valid_, ta, a.valid_);
    return out;
  }

  // Keep only the terms known to be exact.
  Series trusted() const {
    Series out = *this;
    if (!valid_) return out;
    for (auto it = out.terms_.begin(); it != out.terms_.end();)
      it = pol_.value(it->first) < *valid_ ? out.terms_.erase(it) : std::next(it);
    return out;
  }

  // Exact equality of kept terms.
  bool same_terms(const Series& o) const { return terms_ == o.terms_; }

  void set_valid(std::optional<Rational> v) { valid_ = std::move(v); }

 private:
  void note_drop() { raise_valid(floor_); }
  void raise_valid(const Rational& v) {
    if (!valid_ || v > *valid_) valid_ = v;
  }
  void merge_bounds(const Series& o) {
    if (o.floor_ > floor_) floor_ = o.floor_;
    if (o.valid_) raise_valid(*o.valid_);
  }
  void truncate() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (pol_.value(it->first) < floor_) {
        note_drop();
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
  }

  Policy pol_;
  Rational floor_;
  std::optional<Rational> valid_;
  std::map<Exp, Rational> terms_;
};

// sum_{n >= 0} t^{-n w}, truncated at floor.
template <class Policy>
Series<Policy> geom_expand(const Policy& pol, const typename Policy::exponent& w, const Rational& floor) {
  Rational wv = pol.value(w);
  if (sgn(wv) <= 0) throw std::domain_error("geometric expansion needs a positive weight");
  Series<Policy> s(pol, floor);
  typename Policy::exponent e = w * Rational(0);
  while (pol.value(e) >= floor) {
    s.add_term(e, 1);
    e = e - w;
  }
  s.set_valid(floor);
  return s;
}

inline Series<RationalExponents> geom_expand(const Rational& w, const Rational& floor) {
  return geom_expand(RationalExponents{}, w, floor);
}

// Evaluates form exponents at p, keeping only the terms that were exact.
inline Series<RationalExponents> specialize(const Series<FormExponents>& s, const ParamPoint& p,
                                            const Rational& floor) {
  Series<RationalExponents> out(RationalExponents{}, floor);
  Series<FormExponents> t = s.trusted();
  for (const auto& [e, c] : t.terms()) out.add_term(e.eval(p), c);
  return out;
}

template <class Policy>
std::string to_string(const Series<Policy>& s) {
  std::string out;
  for (const auto& [e, c] : s.descending()) {
    Rational m = abs(c);
    std::string mono = "t^(" + Policy::show(e) + ")";
    std::string body = m == 1 ? mono : to_string(m) + "*" + mono;
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + body;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace torusloops
