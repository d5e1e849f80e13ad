#include "torusloops/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace torusloops {

namespace {

long det2(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }

Point2 meet(const Facet& f, const Facet& g) {
  long a = f.normal[0], b = f.normal[1], c = g.normal[0], d = g.normal[1];
  long det = a * d - b * c;
  if (det == 0) throw std::domain_error("parallel adjacent normals");
  Rational inv(1, det);
  inv.canonicalize();
  ParamForm x = (f.support * Rational(d) - g.support * Rational(b)) * inv;
  ParamForm y = (g.support * Rational(a) - f.support * Rational(c)) * inv;
  return {x, y};
}

}  // namespace

std::vector<Point2> vertices(const DelzantPolytope& P) {
  std::size_t n = P.size();
  std::vector<Point2> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(meet(P.facets[i], P.facets[(i + 1) % n]));
  return out;
}

Vec2 facet_direction(const DelzantPolytope& P, std::size_t i) {
  const Vec2& n = P.facets[i].normal;
  return {n[1], -n[0]};
}

ParamForm facet_length_form(const DelzantPolytope& P, std::size_t i) {
  auto V = vertices(P);
  std::size_t n = P.size();
  const Point2& a = V[(i + n - 1) % n];
  const Point2& b = V[i];
  Vec2 d = facet_direction(P, i);
  if (d[0] != 0) return (b.first - a.first) * rat(1, d[0]);
  return (b.second - a.second) * rat(1, d[1]);
}

Rational facet_length(const DelzantPolytope& P, std::size_t i, const ParamPoint& p) {
  return facet_length_form(P, i).eval(p);
}

CheckReport check_delzant(const DelzantPolytope& P, const ParamPoint& p, bool allow_degenerate) {
  CheckReport r;
  std::size_t n = P.size();
  if (n < 3) {
    r.fail("fewer than three facets");
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& v = P.facets[i].normal;
    if (std::gcd(v[0], v[1]) != 1) r.fail("facet " + std::to_string(i) + ": normal not primitive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    long d = det2(P.facets[i].normal, P.facets[(i + 1) % n].normal);
    if (d != 1 && d != -1)
      r.fail("vertex " + std::to_string(i) + ": det = " + std::to_string(d));
    else if (d != 1)
      r.fail("vertex " + std::to_string(i) + ": facets not counterclockwise");
  }
  if (!r.ok) return r;
  for (std::size_t i = 0; i < n; ++i) {
    Rational len = facet_length(P, i, p);
    if (sgn(len) < 0 || (sgn(len) == 0 && !allow_degenerate))
      r.fail("facet " + std::to_string(i) + ": length " + to_string(len) + " at " + to_string(p));
  }
  return r;
}

CheckReport verify_facet_classes(const DelzantPolytope& P) {
  CheckReport r;
  std::size_t n = P.size();
  H2Class total;
  for (std::size_t i = 0; i < n; ++i) {
    if (!P.facets[i].cls) {
      r.fail("facet " + std::to_string(i) + ": undecorated");
      return r;
    }
    total += *P.facets[i].cls;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const H2Class& A = *P.facets[i].cls;
    const H2Class& N = *P.facets[(i + 1) % n].cls;
    std::string at = "facet " + std::to_string(i) + " (" + to_string(A) + "): ";
    if (intersect(A, N) != 1) r.fail(at + "does not meet its successor once");
    long sq = intersect(A, A);
    const Vec2& prev = P.facets[(i + n - 1) % n].normal;
    const Vec2& cur = P.facets[i].normal;
    const Vec2& next = P.facets[(i + 1) % n].normal;
    if (prev[0] + next[0] != -sq * cur[0] || prev[1] + next[1] != -sq * cur[1])
      r.fail(at + "fan relation fails for self-intersection " + std::to_string(sq));
    if (!(facet_length_form(P, i) == area(A)))
      r.fail(at + "length " + to_string(facet_length_form(P, i)) + " differs from area " +
             to_string(area(A)));
    if (chern(A) != sq + 2) r.fail(at + "adjunction fails");
  }
  if (total != canonical_class()) r.fail("facet classes do not sum to the anticanonical class");
  return r;
}

DelzantPolytope gl2_transform(const DelzantPolytope& P, const Mat2& M, const Point2& shift) {
  long det = M.det();
  if (det != 1 && det != -1) throw std::invalid_argument("matrix determinant is not +-1");
  // x -> Mx + s sends normal n to M^{-T} n and support h to h + <M^{-T} n, s>
  long ia = M.d * det, ib = -M.b * det, ic = -M.c * det, id = M.a * det;
  DelzantPolytope out;
  for (const auto& f : P.facets) {
    Facet g = f;
    g.normal = {ia * f.normal[0] + ic * f.normal[1], ib * f.normal[0] + id * f.normal[1]};
    g.support = f.support + shift.first * Rational(g.normal[0]) + shift.second * Rational(g.normal[1]);
    out.facets.push_back(std::move(g));
  }
  if (det < 0) std::reverse(out.facets.begin(), out.facets.end());
  return out;
}

Rational polygon_area(const DelzantPolytope& P, const ParamPoint& p) {
  auto V = vertices(P);
  Rational a2;
  std::size_t n = V.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& u = V[(i + n - 1) % n];
    const auto& v = V[i];
    a2 += u.first.eval(p) * v.second.eval(p) - v.first.eval(p) * u.second.eval(p);
  }
  return a2 / 2;
}

std::pair<Rational, Rational> centroid(const DelzantPolytope& P, const ParamPoint& p) {
  auto V = vertices(P);
  std::size_t n = V.size();
  Rational a, cx, cy;
  for (std::size_t i = 0; i < n; ++i) {
    Rational x0 = V[(i + n - 1) % n].first.eval(p), y0 = V[(i + n - 1) % n].second.eval(p);
    Rational x1 = V[i].first.eval(p), y1 = V[i].second.eval(p);
    Rational cr = x0 * y1 - x1 * y0;
    a += cr;
    cx += (x0 + x1) * cr;
    cy += (y0 + y1) * cr;
  }
  if (sgn(a) == 0) throw std::domain_error("degenerate polygon");
  return {cx / (3 * a), cy / (3 * a)};
}

DelzantPolytope corner_blowup(const DelzantPolytope& P, std::size_t i, const ParamForm& c,
                              const std::optional<H2Class>& E) {
  std::size_t n = P.size();
  std::size_t j = (i + 1) % n;
  DelzantPolytope out = P;
  const Facet& a = P.facets[i];
  const Facet& b = P.facets[j];
  Facet e{{a.normal[0] + b.normal[0], a.normal[1] + b.normal[1]}, a.support + b.support + c, E};
  if (E) {
    if (out.facets[i].cls) *out.facets[i].cls -= *E;
    if (out.facets[j].cls) *out.facets[j].cls -= *E;
  }
  out.facets.insert(out.facets.begin() + static_cast<long>(i) + 1, std::move(e));
  return out;
}

DelzantPolytope rectangle(const ParamForm& w, const ParamForm& h, bool decorate) {
  auto opt = [&](H2Class a) { return decorate ? std::optional<H2Class>(a) : std::nullopt; };
  DelzantPolytope P;
  P.facets = {{{0, 1}, ParamForm(), opt(H2Class::B())},
              {{-1, 0}, -w, opt(H2Class::F())},
              {{0, -1}, -h, opt(H2Class::B())},
              {{1, 0}, ParamForm(), opt(H2Class::F())}};
  return P;
}

DelzantPolytope polygon_from_normals(const std::vector<Vec2>& normals,
                                     const std::vector<ParamForm>& supports) {
  if (normals.size() != supports.size()) throw std::invalid_argument("size mismatch");
  DelzantPolytope P;
  for (std::size_t i = 0; i < normals.size(); ++i) P.facets.push_back({normals[i], supports[i], {}});
  return P;
}

}  // namespace torusloops
