#include "torusloops/seidel.hpp"

#include <algorithm>

namespace torusloops {

std::string to_string(SeidelCaseTag t) {
  switch (t) {
    case SeidelCaseTag::C1: return "1";
    case SeidelCaseTag::C2a: return "2a";
    case SeidelCaseTag::C2b: return "2b";
    case SeidelCaseTag::C3a: return "3a";
    case SeidelCaseTag::C3b: return "3b";
    case SeidelCaseTag::C3c: return "3c";
  }
  return "?";
}

namespace {

ParamForm dot(const Point2& v, const Vec2& xi) { return v.first * Rational(xi[0]) + v.second * Rational(xi[1]); }

const H2Class& facet_class(const DelzantPolytope& P, std::size_t i) {
  if (!P.facets[i].cls) throw std::invalid_argument("facet " + std::to_string(i) + " has no homology class");
  return *P.facets[i].cls;
}

}  // namespace

SeidelCase classify_case(const DelzantPolytope& P, const Vec2& xi, const ParamPoint& p, bool allow_degenerate) {
  auto chk = check_delzant(P, p, allow_degenerate);
  if (!chk.ok) throw std::invalid_argument("not a Delzant polytope at " + to_string(p) + ": " + chk.message);
  const std::size_t m = P.size();
  for (std::size_t i = 0; i < m; ++i) {
    long c = chern(facet_class(P, i));
    if (c < 0)
      throw NonNEFError("facet " + to_string(facet_class(P, i)) + " has first Chern number " + std::to_string(c) +
                        "; use the composite route");
  }
  std::size_t imax = m;
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& n = P.facets[i].normal;
    if (n[0] * xi[1] - n[1] * xi[0] == 0 && n[0] * xi[0] + n[1] * xi[1] < 0) imax = i;
  }
  if (imax == m || sgn(facet_length(P, imax, p)) == 0)
    throw std::invalid_argument("the maximum is attained at a vertex");
  auto cls = [&](long off) { return facet_class(P, static_cast<std::size_t>((static_cast<long>(imax) + off + 2 * static_cast<long>(m)) % static_cast<long>(m))); };
  auto zero = [](const H2Class& a) { return chern(a) == 0; };
  SeidelCase sc;
  sc.max_facet = imax;
  sc.An = cls(0);
  sc.phi_raw = dot(vertices(P)[imax], xi);
  H2Class Al = cls(-1), Ar = cls(1);
  if (zero(sc.An)) {
    if (zero(Al) && zero(Ar)) throw std::invalid_argument("more than two facets with first Chern number zero");
    if (!zero(Al) && !zero(Ar)) {
      sc.tag = SeidelCaseTag::C2a;
    } else {
      sc.tag = SeidelCaseTag::C2b;
      sc.A1 = zero(Ar) ? Ar : Al;
    }
    return sc;
  }
  if (!zero(Al) && !zero(Ar)) {
    sc.tag = SeidelCaseTag::C1;
  } else if (zero(Al) && zero(Ar)) {
    sc.tag = SeidelCaseTag::C3c;
    sc.A1 = Ar;
    sc.Anm1 = Al;
  } else {
    bool right = zero(Ar);
    sc.A1 = right ? Ar : Al;
    H2Class next = right ? cls(2) : cls(-2);
    if (zero(next)) {
      sc.tag = SeidelCaseTag::C3b;
      sc.A2 = next;
    } else {
      sc.tag = SeidelCaseTag::C3a;
    }
  }
  return sc;
}

Rational normalized_max(const DelzantPolytope& P, const Vec2& xi, const ParamPoint& p) {
  auto V = vertices(P);
  std::optional<Rational> top;
  for (const auto& v : V) {
    Rational x = dot(v, xi).eval(p);
    if (!top || x > *top) top = x;
  }
  auto [cx, cy] = centroid(P, p);
  return *top - (cx * xi[0] + cy * xi[1]);
}

SeidelElement seidel_element(const DelzantPolytope& P, const Vec2& xi, const ParamPoint& p, const Rational& floor,
                             const std::string& action) {
  SeidelElement s;
  s.action = action;
  s.point = p;
  s.floor = floor;
  s.cs = classify_case(P, xi, p, true);
  s.phi_max = normalized_max(P, xi, p);
  s.value = seidel_formula(s.cs, RationalExponents{}, s.phi_max, p, floor);
  return s;
}

namespace {

std::pair<int, int> others(int i) {
  if (i < 2 || i > 4) throw std::invalid_argument("i must be 2, 3 or 4");
  std::vector<int> r;
  for (int j = 2; j <= 4; ++j)
    if (j != i) r.push_back(j);
  return {r[0], r[1]};
}

Rational cube(const Rational& x) { return x * x * x; }

Rational denom(const ParamPoint& p) {
  Rational s2 = 0;
  for (const auto& c : p.c) s2 += c * c;
  return 3 * (s2 - 2 * p.mu);
}

}  // namespace

DelzantPolytope z01i_polytope(int i) {
  auto [j, l] = others(i);
  return build_blowups(0, {{"BL", {1}, ""}, {"TL", {i}, ""}, {"TR", {j}, ""}, {"BR", {l}, ""}});
}

Rational printed_epsilon_z01i(int i, const ParamPoint& p) {
  auto [j, l] = others(i);
  auto c = [&](int k) { return p.c[k - 1]; };
  Rational num = cube(c(j)) + 3 * c(1) * c(1) - cube(c(1)) + cube(c(l)) + 3 * c(i) * c(i) - cube(c(i)) - 3 * p.mu;
  return num / denom(p);
}

Rational printed_epsilon_z1(const ParamPoint& p) {
  const auto& [c1, c2, c3, c4] = p.c;
  Rational num = -1 - cube(c1) + 3 * c1 * c1 + 3 * c2 * c2 - cube(c2) + 3 * c3 * c3 - cube(c3) + 3 * c4 * c4 -
                 cube(c4) + 3 * c1 * c4 * c4 - 3 * c3 * c4 * c4 - 3 * p.mu;
  return num / denom(p);
}

Rational printed_gamma(const ParamPoint& p) {
  const auto& [c1, c2, c3, c4] = p.c;
  const Rational& mu = p.mu;
  Rational num = -1 + 3 * c1 * c1 - 3 * cube(c1) + 3 * c2 * c2 - 3 * c1 * c2 * c2 - 2 * cube(c2) + cube(c3) +
                 cube(c4) + 3 * c1 * c1 * mu + 3 * c2 * c2 * mu - 3 * mu * mu;
  return num / denom(p);
}

Rational printed_beta(const ParamPoint& p) {
  const auto& [c1, c2, c3, c4] = p.c;
  const Rational& mu = p.mu;
  Rational num = 3 * c1 * c1 - 2 * cube(c1) + 3 * c2 * c2 - 3 * c1 * c2 * c2 - cube(c2) + 2 * cube(c3) +
                 3 * c4 * c4 - 3 * mu + 3 * c1 * c1 * mu + 3 * c2 * c2 * mu - 3 * mu * mu;
  return num / denom(p);
}

DelzantPolytope t14_polytope() { return gl2_transform(catalog("NEF14").polytope, Mat2{1, 0, 1, 1}); }
DelzantPolytope s14_polytope() { return gl2_transform(catalog("AUX14").polytope, Mat2{1, 0, 1, 1}); }

Rational centroid_epsilon_z01i(int i, const ParamPoint& p) { return normalized_max(z01i_polytope(i), {1, 0}, p); }

Rational centroid_epsilon_z1(const ParamPoint& p) { return 1 - normalized_max(catalog("T_1").polytope, {1, 0}, p); }

Rational centroid_gamma(const ParamPoint& p) {
  return p.mu + 1 - p.c[0] - p.c[1] - normalized_max(t14_polytope(), t14_direction(), p);
}

Rational centroid_beta(const ParamPoint& p) {
  return normalized_max(s14_polytope(), s14_inverse_direction(), p) + p.c[2];
}

QHRational printed_seidel_z01i(int i, const ParamPoint& p, const Rational& floor) {
  auto [j, l] = others(i);
  RationalExponents pol;
  H2Class a = H2Class::B() - H2Class::E(j) - H2Class::E(l);
  QHRational out(pol, floor);
  out.add_class(a, 1,
                Series<RationalExponents>::monomial(pol, floor, printed_epsilon_z01i(i, p)) *
                    geom_expand(area(a, p), floor));
  return out;
}

QHRational printed_seidel_z1(const ParamPoint& p, const Rational& floor) {
  RationalExponents pol;
  H2Class a = H2Class::B() + H2Class::F() - H2Class::E(1) - H2Class::E(2) - H2Class::E(3) - H2Class::E(4);
  QHRational out(pol, floor);
  out.add_class(a, 1,
                Series<RationalExponents>::monomial(pol, floor, 1 - printed_epsilon_z1(p)) *
                    geom_expand(area(a, p), floor));
  return out;
}

// As printed, the scalar tail also carries q.
QHRational printed_seidel_z14(const ParamPoint& p, const Rational& floor) {
  RationalExponents pol;
  Rational e = printed_beta(p) - printed_gamma(p);
  H2Class a = H2Class::B() + H2Class::F() - H2Class::E(1) - H2Class::E(2) - H2Class::E(3);
  QHRational out = QHRational::of_class(pol, floor, a, 1, e);
  out.add(QHKey{QHKind::X, 0, 1}, Series<RationalExponents>::monomial(pol, floor, p.c[3] - p.mu + e));
  return out;
}

namespace {

bool strictly_valid(const DelzantPolytope& P, const ParamPoint& p) { return check_delzant(P, p).ok; }

ParamPoint chamber_near(const ParamPoint& p, const DelzantPolytope& T, const DelzantPolytope& S) {
  if (strictly_valid(T, p) && strictly_valid(S, p)) return p;
  bool ma = std::all_of(p.c.begin(), p.c.end(), [](const Rational& c) { return c == rat(1, 2); });
  if (ma) {
    for (long d : {20L, 40L, 80L, 160L}) {
      Rational dl = rat(1, d), h = rat(1, 2);
      ParamPoint q = make_point(p.mu, h + dl, h - 2 * dl, h - 3 * dl, h - 4 * dl);
      if (strictly_valid(T, q) && strictly_valid(S, q)) return q;
    }
  }
  throw std::invalid_argument("no chamber point next to " + to_string(p) + " where both auxiliary polytopes are valid");
}

}  // namespace

SeidelZ14Report seidel_z14(const ParamPoint& p, const Rational& floor) {
  DelzantPolytope T = t14_polytope(), S = s14_polytope();
  for (const auto* P : {&T, &S}) {
    auto chk = check_delzant(*P, p, true);
    if (!chk.ok) throw std::invalid_argument("auxiliary polytope invalid at " + to_string(p) + ": " + chk.message);
  }
  SeidelZ14Report rep;
  rep.chamber = chamber_near(p, T, S);
  FormExponents pol{rep.chamber};
  SeidelCase ct = classify_case(T, t14_direction(), rep.chamber);
  SeidelCase cs = classify_case(S, s14_inverse_direction(), rep.chamber);
  auto St = seidel_formula(ct, pol, ct.phi_raw, rep.chamber, floor);
  auto Ss = seidel_formula(cs, pol, cs.phi_raw, rep.chamber, floor);
  QHElement<FormExponents> R = qh_mul(St, Ss, rep.chamber).trusted();

  Rational off = normalized_max(T, t14_direction(), p) - ct.phi_raw.eval(p) +
                 normalized_max(S, s14_inverse_direction(), p) - cs.phi_raw.eval(p);
  RationalExponents rp;
  QHRational value(rp, floor);
  for (const auto& [k, s] : R.components()) {
    Series<RationalExponents> clean(rp, floor);
    auto sp = specialize(s, p, min_of(floor, floor - off));
    for (const auto& [e, c] : sp.terms())
      if (e + off >= floor) clean.add_term(e + off, c);
    value.add(k, clean);
    if (k.kind == QHKind::Pt) rep.pt_residual.add(k, clean);
  }
  rep.pt_cancels = rep.pt_residual.is_zero();
  rep.exponent = centroid_beta(p) - centroid_gamma(p);

  H2Class lead = H2Class::B() + H2Class::F() - H2Class::E(1) - H2Class::E(2) - H2Class::E(3);
  rep.expected = QHRational::of_class(rp, floor, lead, 1, rep.exponent);
  rep.expected.add(QHKey{QHKind::X, 0, 0}, Series<RationalExponents>::monomial(rp, floor, p.c[3] - p.mu + rep.exponent));
  rep.matches_exact = qh_equal(value, rep.expected, false);
  rep.matches_forget_q = qh_equal(value, printed_seidel_z14(p, floor), true);
  for (const auto& [k, s] : value.components())
    if (k.kind != QHKind::H) rep.tail_component += (rep.tail_component.empty() ? "" : ",") + key_label(k);

  rep.element.action = "z_{1,4}";
  rep.element.point = p;
  rep.element.floor = floor;
  rep.element.cs = ct;
  rep.element.phi_max = rep.exponent;
  rep.element.value = value;
  return rep;
}

DistinctnessReport distinct_generators(const ParamPoint& p, const Rational& floor) {
  DistinctnessReport rep;
  for (int i = 2; i <= 4; ++i)
    rep.elements.emplace_back(z_name(0, {1, i}), seidel_element(z01i_polytope(i), {1, 0}, p, floor).value);
  rep.elements.emplace_back("z_1", seidel_element(catalog("T_1").polytope, {1, 0}, p, floor).value);
  rep.elements.emplace_back("z_{1,4}", seidel_z14(p, floor).element.value);
  for (std::size_t a = 0; a < rep.elements.size(); ++a)
    for (std::size_t b = a + 1; b < rep.elements.size(); ++b) {
      bool d = !qh_equal(rep.elements[a].second, rep.elements[b].second, false);
      rep.pairs.emplace_back(rep.elements[a].first, rep.elements[b].first, d);
      if (d) ++rep.distinct_pairs;
    }
  rep.all_distinct = rep.distinct_pairs == static_cast<int>(rep.pairs.size());
  return rep;
}

}  // namespace torusloops
