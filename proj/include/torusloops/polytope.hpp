#pragma once

#include "torusloops/homology.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torusloops {

using Vec2 = std::array<long, 2>;
using Point2 = std::pair<ParamForm, ParamForm>;

struct Mat2 {
  long a = 1, b = 0, c = 0, d = 1;  // [[a,b],[c,d]]
  long det() const { return a * d - b * c; }
  bool operator==(const Mat2&) const = default;
};

// <x, normal> >= support inside, equality on the facet
struct Facet {
  Vec2 normal{};
  ParamForm support;
  std::optional<H2Class> cls;
};

// Facets in counterclockwise order; vertex i is facet i meets facet i+1.
struct DelzantPolytope {
  std::vector<Facet> facets;
  std::size_t size() const { return facets.size(); }
};

struct CheckReport {
  bool ok = true;
  std::string message;  // first violation
  void fail(std::string m) {
    if (ok) message = std::move(m);
    ok = false;
  }
};

std::vector<Point2> vertices(const DelzantPolytope& P);
// facet i runs from vertex i-1 to vertex i
ParamForm facet_length_form(const DelzantPolytope& P, std::size_t i);
Rational facet_length(const DelzantPolytope& P, std::size_t i, const ParamPoint& p);
Vec2 facet_direction(const DelzantPolytope& P, std::size_t i);

// Lengths must be positive; with allow_degenerate zero-length facets are tolerated
// (walls of the parameter space such as c1 = c2).
CheckReport check_delzant(const DelzantPolytope& P, const ParamPoint& p,
                          bool allow_degenerate = false);
CheckReport verify_facet_classes(const DelzantPolytope& P);

DelzantPolytope gl2_transform(const DelzantPolytope& P, const Mat2& M,
                              const Point2& shift = {ParamForm(), ParamForm()});

std::pair<Rational, Rational> centroid(const DelzantPolytope& P, const ParamPoint& p);
Rational polygon_area(const DelzantPolytope& P, const ParamPoint& p);

// Blow up the corner between facets i and i+1 with size c; the new facet gets class E.
DelzantPolytope corner_blowup(const DelzantPolytope& P, std::size_t i, const ParamForm& c,
                              const std::optional<H2Class>& E);

// [0,w] x [0,h] with the product classes
DelzantPolytope rectangle(const ParamForm& w, const ParamForm& h, bool decorate = true);
DelzantPolytope polygon_from_normals(const std::vector<Vec2>& normals,
                                     const std::vector<ParamForm>& supports);

}  // namespace torusloops
