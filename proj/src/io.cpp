#include "torusloops/io.hpp"

#include <stdexcept>

namespace torusloops {

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a string or an integer");
}

json to_json(const ParamPoint& p) {
  json c = json::array();
  for (const auto& x : p.c) c.push_back(to_string(x));
  return {{"mu", to_string(p.mu)}, {"c", c}};
}

ParamPoint point_from_json(const json& j) {
  const json& c = j.at("c");
  if (!c.is_array() || c.size() != 4) throw std::invalid_argument("point needs four c values");
  return make_point(rational_from_json(j.at("mu")), rational_from_json(c[0]),
                    rational_from_json(c[1]), rational_from_json(c[2]), rational_from_json(c[3]));
}

json to_json(const ParamForm& f) { return to_string(f); }

json to_json(const H2Class& a) {
  return {{"basis", "BFE"}, {"coeffs", a.v}, {"label", to_string(a)}};
}

H2Class class_from_json(const json& j) {
  if (j.is_string()) return parse_class(j.get<std::string>());
  if (j.value("basis", std::string("BFE")) == "LV") return from_lv(j.at("coeffs").get<std::array<long, 6>>());
  H2Class a;
  a.v = j.at("coeffs").get<std::array<long, 6>>();
  return a;
}

json to_json(const DelzantPolytope& P) {
  json fs = json::array();
  for (const auto& f : P.facets) {
    json o = {{"normal", f.normal}, {"support", to_string(f.support)}};
    if (f.cls) o["class"] = to_string(*f.cls);
    fs.push_back(o);
  }
  return {{"facets", fs}};
}

DelzantPolytope polytope_from_json(const json& j) {
  DelzantPolytope P;
  for (const auto& o : j.at("facets")) {
    Facet f;
    f.normal = o.at("normal").get<Vec2>();
    const json& s = o.at("support");
    f.support = s.is_string() ? parse_param_form(s.get<std::string>()) : ParamForm(rational_from_json(s));
    if (o.contains("class") && !o["class"].is_null()) f.cls = class_from_json(o["class"]);
    P.facets.push_back(f);
  }
  return P;
}

json to_json(const KarshonGraph& G) {
  json fat = json::array(), fixed = json::array(), edges = json::array();
  for (const auto& v : G.fat) {
    json o = {{"moment", to_string(v.moment)}, {"area", to_string(v.area)}, {"genus", v.genus}};
    if (v.cls) o["class"] = to_string(*v.cls);
    fat.push_back(o);
  }
  for (const auto& x : G.fixed) fixed.push_back(to_string(x));
  for (const auto& e : G.edges)
    edges.push_back({{"lo", to_string(e.lo)}, {"hi", to_string(e.hi)}, {"isotropy", e.isotropy}});
  return {{"fat", fat}, {"fixed", fixed}, {"edges", edges}};
}

json to_json(const Mat2& M) { return json::array({json::array({M.a, M.b}), json::array({M.c, M.d})}); }

Mat2 mat_from_json(const json& j) {
  Mat2 M{j.at(0).at(0).get<long>(), j.at(0).at(1).get<long>(), j.at(1).at(0).get<long>(),
         j.at(1).at(1).get<long>()};
  if (M.det() != 1 && M.det() != -1) throw std::invalid_argument("matrix is not in GL(2,Z)");
  return M;
}

json to_json(const QHKey& k) {
  json o;
  switch (k.kind) {
    case QHKind::Pt: o["class"] = "pt"; break;
    case QHKind::X: o["class"] = "X"; break;
    case QHKind::H: o["class"] = to_string(H2Class::unit(k.index)); break;
  }
  o["q"] = k.q;
  return o;
}

json to_json(const RingRelationReport& r) {
  json o = {{"id", r.id}, {"statement", r.statement}, {"reading", r.reading},
            {"zero", r.zero}, {"diff", to_json(r.diff)}};
  if (!r.literal_note.empty()) o["literal_note"] = r.literal_note;
  if (r.literal_diff) o["literal_diff"] = to_json(*r.literal_diff);
  return o;
}

json to_json(const RelationCertificate& c, const VerifyResult& v) {
  json ev = json::array();
  for (const auto& e : c.evidence)
    ev.push_back({{"a", describe(e.a)}, {"b", describe(e.b)}, {"expect", to_string(e.expect)}});
  return {{"id", c.id}, {"lhs", to_string(c.lhs)}, {"rhs", to_string(c.rhs)},
          {"evidence", ev}, {"ok", v.ok}, {"detail", v.detail}};
}

json to_json(const DerivedRelation& d) {
  return {{"id", d.id}, {"lhs", to_string(d.lhs)}, {"rhs", to_string(d.rhs)},
          {"certified", d.certified}, {"multiplier", d.multiplier.get_str()}};
}

json to_json(const LatticeReport& r, bool include_atomic) {
  json o;
  int ok = 0;
  for (const auto& [c, v] : r.atomic) ok += v.ok;
  o["atomic_total"] = r.atomic.size();
  o["atomic_ok"] = ok;
  if (include_atomic) {
    json a = json::array();
    for (const auto& [c, v] : r.atomic) a.push_back(to_json(c, v));
    o["atomic"] = a;
  } else {
    json failed = json::array();
    for (const auto& [c, v] : r.atomic)
      if (!v.ok) failed.push_back(to_json(c, v));
    o["atomic_failed"] = failed;
  }
  json d = json::array();
  for (const auto& x : r.derived) d.push_back(to_json(x));
  o["derived"] = d;
  json b = json::object();
  for (const auto& [s, e] : r.basis_expressions) b[s] = to_string(e);
  o["basis_expressions"] = b;
  o["unreduced"] = r.unreduced;
  o["rank"] = r.rank;
  o["all_ok"] = r.all_ok;
  return o;
}

json to_json(const SeidelElement& s) {
  json o = {{"action", s.action},
            {"point", to_json(s.point)},
            {"floor", to_string(s.floor)},
            {"case", to_string(s.cs.tag)},
            {"max_facet", s.cs.max_facet},
            {"An", to_string(s.cs.An)},
            {"phi_raw", to_string(s.cs.phi_raw)},
            {"phi_max", to_string(s.phi_max)},
            {"value", to_json(s.value)}};
  if (s.cs.A1) o["A1"] = to_string(*s.cs.A1);
  if (s.cs.A2) o["A2"] = to_string(*s.cs.A2);
  if (s.cs.Anm1) o["Anm1"] = to_string(*s.cs.Anm1);
  return o;
}

json to_json(const SeidelZ14Report& r) {
  return {{"element", to_json(r.element)},
          {"chamber", to_json(r.chamber)},
          {"exponent", to_string(r.exponent)},
          {"pt_cancels", r.pt_cancels},
          {"matches_forget_q", r.matches_forget_q},
          {"matches_exact", r.matches_exact},
          {"tail_component", r.tail_component},
          {"expected", to_json(r.expected)},
          {"pt_residual", to_json(r.pt_residual)}};
}

json to_json(const DistinctnessReport& r) {
  json el = json::array(), pairs = json::array();
  for (const auto& [n, v] : r.elements) el.push_back({{"action", n}, {"value", to_json(v)}});
  for (const auto& [a, b, d] : r.pairs) pairs.push_back({{"a", a}, {"b", b}, {"distinct", d}});
  return {{"elements", el}, {"pairs", pairs}, {"distinct_pairs", r.distinct_pairs},
          {"all_distinct", r.all_distinct}};
}

json to_json(const Enumeration& e) {
  json a = json::array();
  for (const auto& [n, g] : e.actions)
    a.push_back({{"name", n.name()}, {"k", n.k}, {"X", index_string(n.X)}, {"sign", n.sign},
                 {"graph", to_json(g)}});
  return {{"count", e.actions.size()}, {"actions", a}, {"warnings", e.warnings}};
}

}  // namespace torusloops
