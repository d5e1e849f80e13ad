#pragma once

#include "torusloops/catalog.hpp"
#include "torusloops/qh.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusloops {

enum class SeidelCaseTag { C1, C2a, C2b, C3a, C3b, C3c };
std::string to_string(SeidelCaseTag t);

// Adjacency pattern of zero-Chern facets around the facet where <x, xi> is maximal.
struct SeidelCase {
  SeidelCaseTag tag = SeidelCaseTag::C1;
  std::size_t max_facet = 0;
  H2Class An;
  std::optional<H2Class> A1;    // zero-Chern neighbour (2b, 3a, 3b), or the right one in 3c
  std::optional<H2Class> A2;    // next facet after A1 (3b)
  std::optional<H2Class> Anm1;  // left zero-Chern neighbour in 3c
  ParamForm phi_raw;            // <x, xi> on the maximal facet, unnormalized
};

struct NonNEFError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SeidelCase classify_case(const DelzantPolytope& P, const Vec2& xi, const ParamPoint& p,
                         bool allow_degenerate = false);

// max <v, xi> over vertices minus <centroid, xi>.
Rational normalized_max(const DelzantPolytope& P, const Vec2& xi, const ParamPoint& p);

// The closed formula of the case, with phi the exponent of the leading term.
template <class Policy>
QHElement<Policy> seidel_formula(const SeidelCase& sc, const Policy& pol,
                                 const typename Policy::exponent& phi, const ParamPoint& p,
                                 const Rational& floor) {
  using Q = QHElement<Policy>;
  using S = Series<Policy>;
  using E = typename Policy::exponent;
  auto om = [&](const H2Class& a) { return pol.lift(area(a), p); };
  auto mono = [&](const E& e) { return S::monomial(pol, floor, e); };
  auto geo = [&](const E& w) { return geom_expand(pol, w, floor); };
  Q out(pol, floor);
  // A t^{phi - w} / (1 - t^{-w})
  auto corner = [&](const H2Class& A, const Rational& sign) {
    E w = om(A);
    out.add_class(A, 1, mono(phi - w) * geo(w), sign);
  };
  switch (sc.tag) {
    case SeidelCaseTag::C1:
      out.add_class(sc.An, 1, mono(phi));
      break;
    case SeidelCaseTag::C2a:
      out.add_class(sc.An, 1, mono(phi) * geo(om(sc.An)));
      break;
    case SeidelCaseTag::C2b: {
      E wn = om(sc.An), w1 = om(*sc.A1), w = wn + w1;
      out.add_class(sc.An, 1, mono(phi) * geo(wn) * geo(w));
      out.add_class(*sc.A1, 1, mono(phi - w1) * geo(w1) * geo(w), -1);
      break;
    }
    case SeidelCaseTag::C3a:
      out.add_class(sc.An, 1, mono(phi));
      corner(*sc.A1, -1);
      break;
    case SeidelCaseTag::C3b: {
      out.add_class(sc.An, 1, mono(phi));
      corner(*sc.A1, -1);
      E w1 = om(*sc.A1), w2 = om(*sc.A2), w = w1 + w2;
      out.add_class(*sc.A1, 1, mono(phi - w) * geo(w1) * geo(w), -1);
      out.add_class(*sc.A2, 1, mono(phi - w - w2) * geo(w2) * geo(w));
      break;
    }
    case SeidelCaseTag::C3c:
      out.add_class(sc.An, 1, mono(phi));
      corner(*sc.Anm1, -1);
      corner(*sc.A1, -1);
      break;
  }
  return out;
}

struct SeidelElement {
  std::string action;
  ParamPoint point;
  Rational floor;
  SeidelCase cs;
  Rational phi_max;  // normalized
  QHRational value{RationalExponents{}, Rational(0)};
};

// Degenerate (zero-length) facets are accepted so that the MA edge can be used directly.
SeidelElement seidel_element(const DelzantPolytope& P, const Vec2& xi, const ParamPoint& p,
                             const Rational& floor, const std::string& action = "");

// Polytope and direction whose Seidel element is computed for the generator z_{0,1i}.
DelzantPolytope z01i_polytope(int i);

// The exponents printed in the text, as rational functions of the point.
Rational printed_epsilon_z01i(int i, const ParamPoint& p);
Rational printed_epsilon_z1(const ParamPoint& p);  // S(z_1) carries t^{1 - epsilon}
Rational printed_gamma(const ParamPoint& p);
Rational printed_beta(const ParamPoint& p);

// The same quantities read off the centroid of the normalized polytopes.
Rational centroid_epsilon_z01i(int i, const ParamPoint& p);
Rational centroid_epsilon_z1(const ParamPoint& p);
Rational centroid_gamma(const ParamPoint& p);
Rational centroid_beta(const ParamPoint& p);

// The two NEF polytopes of the z_{1,4} detour, already transformed, with their directions.
DelzantPolytope t14_polytope();
DelzantPolytope s14_polytope();
inline Vec2 t14_direction() { return {0, 1}; }
inline Vec2 s14_inverse_direction() { return {0, -1}; }

// Printed closed forms.
QHRational printed_seidel_z01i(int i, const ParamPoint& p, const Rational& floor);
QHRational printed_seidel_z1(const ParamPoint& p, const Rational& floor);
QHRational printed_seidel_z14(const ParamPoint& p, const Rational& floor);

struct SeidelZ14Report {
  SeidelElement element;
  ParamPoint chamber;  // point ordering the symbolic exponents
  Rational exponent;   // beta - gamma from the centroids
  bool pt_cancels = false;
  bool matches_forget_q = false;
  bool matches_exact = false;
  std::string tail_component;
  QHRational expected{RationalExponents{}, Rational(0)};
  QHRational pt_residual{RationalExponents{}, Rational(0)};
};

// S(t_{1,4}) * S(s_{1,4})^{-1}, computed with symbolic exponents at a chamber point next to p
// and evaluated at p.
SeidelZ14Report seidel_z14(const ParamPoint& p, const Rational& floor);

struct DistinctnessReport {
  std::vector<std::pair<std::string, QHRational>> elements;
  std::vector<std::tuple<std::string, std::string, bool>> pairs;  // (a, b, distinct)
  int distinct_pairs = 0;
  bool all_distinct = false;
};

DistinctnessReport distinct_generators(const ParamPoint& p, const Rational& floor);

}  // namespace torusloops
