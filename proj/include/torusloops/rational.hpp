#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>

namespace torusloops {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q" and finite decimals such as "-0.35".
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

inline Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min_of(const Rational& a, const Rational& b) { return b < a ? b : a; }

struct ParamPoint {
  Rational mu;
  std::array<Rational, 4> c;

  bool operator==(const ParamPoint&) const = default;
};

ParamPoint make_point(const Rational& mu, const Rational& c1, const Rational& c2,
                      const Rational& c3, const Rational& c4);
ParamPoint ma_point(const Rational& mu);
// mu = 2, c = 1/2 x 4
ParamPoint ma2();
// A chamber point away from every wall used by the catalog.
ParamPoint generic_point();

// 0 < c4 <= c3 <= c2 <= c1 <= 1 <= mu and ci + cj <= 1
bool is_reduced_point(const ParamPoint& p);
// strict version of the above
bool is_generic_point(const ParamPoint& p);

std::string to_string(const ParamPoint& p);

}  // namespace torusloops
