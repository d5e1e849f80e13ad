#pragma once

#include "torusloops/karshon.hpp"
#include "torusloops/lattice.hpp"
#include "torusloops/qh.hpp"
#include "torusloops/seidel.hpp"

#include <json.hpp>

namespace torusloops {

using nlohmann::json;

// Rationals travel as strings ("-3/2"); forms as "mu - c1 + 1/2".
json to_json(const Rational& q);
Rational rational_from_json(const json& j);
json to_json(const ParamPoint& p);
ParamPoint point_from_json(const json& j);
json to_json(const ParamForm& f);
json to_json(const H2Class& a);
H2Class class_from_json(const json& j);

// {"facets":[{"normal":[1,0],"support":"mu","class":"B - E1"}]}
json to_json(const DelzantPolytope& P);
DelzantPolytope polytope_from_json(const json& j);

json to_json(const KarshonGraph& G);
json to_json(const Mat2& M);
Mat2 mat_from_json(const json& j);

template <class Policy>
json to_json(const Series<Policy>& s) {
  json out = json::array();
  for (const auto& [e, c] : s.descending()) out.push_back({Policy::show(e), to_string(c)});
  return out;
}

json to_json(const QHKey& k);

template <class Policy>
json to_json(const QHElement<Policy>& u) {
  json comps = json::array();
  for (const auto& [k, s] : u.components()) {
    json c = to_json(k);
    c["series"] = to_json(s);
    comps.push_back(c);
  }
  return {{"components", comps}, {"floor", to_string(u.floor())}};
}

json to_json(const RingRelationReport& r);
json to_json(const RelationCertificate& c, const VerifyResult& v);
json to_json(const DerivedRelation& d);
json to_json(const LatticeReport& r, bool include_atomic = false);
json to_json(const SeidelElement& s);
json to_json(const SeidelZ14Report& r);
json to_json(const DistinctnessReport& r);
json to_json(const Enumeration& e);

}  // namespace torusloops
