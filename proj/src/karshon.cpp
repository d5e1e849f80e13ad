#include "torusloops/karshon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace torusloops {

std::string to_string(GraphRelation r) {
  switch (r) {
    case GraphRelation::Equal: return "Equal";
    case GraphRelation::FlipEqual: return "FlipEqual";
    case GraphRelation::Distinct: return "Distinct";
  }
  return "?";
}

KarshonGraph translate(const KarshonGraph& G, const ParamForm& by) {
  KarshonGraph H = G;
  for (auto& f : H.fat) f.moment += by;
  for (auto& x : H.fixed) x += by;
  for (auto& e : H.edges) {
    e.lo += by;
    e.hi += by;
  }
  return H;
}

KarshonGraph normalize(const KarshonGraph& G, const ParamPoint& p) {
  ValueOrder less{&p};
  std::vector<ParamForm> all;
  for (const auto& f : G.fat) all.push_back(f.moment);
  all.insert(all.end(), G.fixed.begin(), G.fixed.end());
  if (all.empty()) return G;
  ParamForm base = *std::min_element(all.begin(), all.end(), less);
  KarshonGraph H = translate(G, -base);
  std::sort(H.fat.begin(), H.fat.end(), [&](const FatVertex& a, const FatVertex& b) {
    if (!(a.moment == b.moment)) return less(a.moment, b.moment);
    return a.cls < b.cls;
  });
  std::sort(H.fixed.begin(), H.fixed.end(), less);
  for (auto& e : H.edges)
    if (less(e.hi, e.lo)) std::swap(e.lo, e.hi);
  std::sort(H.edges.begin(), H.edges.end(), [&](const GraphEdge& a, const GraphEdge& b) {
    if (!(a.lo == b.lo)) return less(a.lo, b.lo);
    if (!(a.hi == b.hi)) return less(a.hi, b.hi);
    return a.isotropy < b.isotropy;
  });
  return H;
}

KarshonGraph flip(const KarshonGraph& G, const ParamPoint& p) {
  KarshonGraph H = G;
  for (auto& f : H.fat) f.moment = -f.moment;
  for (auto& x : H.fixed) x = -x;
  for (auto& e : H.edges) {
    ParamForm lo = -e.hi, hi = -e.lo;
    e.lo = lo;
    e.hi = hi;
  }
  return normalize(H, p);
}

KarshonGraph strip_classes(const KarshonGraph& G) {
  KarshonGraph H = G;
  for (auto& f : H.fat) f.cls.reset();
  return H;
}

KarshonGraph project(const DelzantPolytope& P, const Vec2& xi, const ParamPoint& p) {
  if (std::gcd(xi[0], xi[1]) != 1) throw std::invalid_argument("projection direction not primitive");
  auto V = vertices(P);
  std::size_t n = P.size();
  std::vector<ParamForm> mom;
  std::vector<Rational> val;
  for (const auto& v : V) {
    mom.push_back(v.first * Rational(xi[0]) + v.second * Rational(xi[1]));
    val.push_back(mom.back().eval(p));
  }
  Rational lo = *std::min_element(val.begin(), val.end());
  Rational hi = *std::max_element(val.begin(), val.end());
  KarshonGraph G;
  std::vector<bool> on_fat(n, false);
  std::vector<long> weight(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 d = facet_direction(P, i);
    weight[i] = xi[0] * d[0] + xi[1] * d[1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (weight[i] != 0) continue;
    if (val[i] != lo && val[i] != hi)
      throw std::domain_error("facet " + std::to_string(i) + " is fixed but not extremal");
    G.fat.push_back({mom[i], facet_length_form(P, i), 0, P.facets[i].cls});
    on_fat[i] = on_fat[(i + n - 1) % n] = true;
    for (std::size_t nb : {(i + n - 1) % n, (i + 1) % n})
      if (weight[nb] != 1 && weight[nb] != -1)
        throw std::domain_error("isotropy edge touches a fixed surface");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!on_fat[i]) G.fixed.push_back(mom[i]);
  for (std::size_t i = 0; i < n; ++i) {
    long w = weight[i] < 0 ? -weight[i] : weight[i];
    if (w >= 2) G.edges.push_back({mom[(i + n - 1) % n], mom[i], static_cast<int>(w)});
  }
  return normalize(G, p);
}

GraphRelation graphs_equal(const KarshonGraph& G, const KarshonGraph& H, const ParamPoint& p) {
  KarshonGraph a = normalize(G, p), b = normalize(H, p);
  if (a == b) return GraphRelation::Equal;
  if (flip(a, p) == b) return GraphRelation::FlipEqual;
  return GraphRelation::Distinct;
}

namespace {

std::string fat_string(const FatVertex& f) {
  return "fat(" + to_string(f.moment) + "; area " + to_string(f.area) + "; " +
         (f.cls ? to_string(*f.cls) : std::string("unlabeled")) + ")";
}

std::string edge_string(const GraphEdge& e) {
  return "edge(" + to_string(e.lo) + " -- " + to_string(e.hi) + "; " + std::to_string(e.isotropy) + ")";
}

}  // namespace

std::string graph_diff(const KarshonGraph& G, const KarshonGraph& H, const ParamPoint& p) {
  KarshonGraph a = normalize(G, p), b = normalize(H, p);
  if (a.fat.size() != b.fat.size())
    return "fat vertex count " + std::to_string(a.fat.size()) + " vs " + std::to_string(b.fat.size());
  for (std::size_t i = 0; i < a.fat.size(); ++i)
    if (!(a.fat[i] == b.fat[i])) return fat_string(a.fat[i]) + " vs " + fat_string(b.fat[i]);
  if (a.fixed.size() != b.fixed.size())
    return "fixed point count " + std::to_string(a.fixed.size()) + " vs " +
           std::to_string(b.fixed.size());
  for (std::size_t i = 0; i < a.fixed.size(); ++i)
    if (!(a.fixed[i] == b.fixed[i]))
      return "fixed point " + to_string(a.fixed[i]) + " vs " + to_string(b.fixed[i]);
  if (a.edges.size() != b.edges.size())
    return "edge count " + std::to_string(a.edges.size()) + " vs " + std::to_string(b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    if (!(a.edges[i] == b.edges[i])) return edge_string(a.edges[i]) + " vs " + edge_string(b.edges[i]);
  return "";
}

KarshonGraph blowup_min_surface(const KarshonGraph& G, const ParamForm& c, const ParamPoint& p) {
  ValueOrder less{&p};
  std::vector<ParamForm> all;
  for (const auto& f : G.fat) all.push_back(f.moment);
  all.insert(all.end(), G.fixed.begin(), G.fixed.end());
  if (all.empty()) throw std::invalid_argument("empty graph");
  Rational lo = std::min_element(all.begin(), all.end(), less)->eval(p);
  KarshonGraph H = G;
  for (auto& f : H.fat) {
    if (f.moment.eval(p) != lo) continue;
    if (!(f.area.eval(p) > c.eval(p)) || sgn(c.eval(p)) <= 0)
      throw std::invalid_argument("blow-up size must be positive and below the surface area");
    H.fixed.push_back(f.moment + c);
    f.area -= c;
    return normalize(H, p);
  }
  throw std::invalid_argument("no fixed surface at the minimum");
}

KarshonGraph blowup_interior(const KarshonGraph& G, const ParamForm& v, int m, int n,
                             const ParamForm& c, const ParamPoint& p) {
  if (m < 1 || n < 1) throw std::invalid_argument("weights must be positive");
  if (sgn(c.eval(p)) <= 0) throw std::invalid_argument("blow-up size must be positive");
  KarshonGraph H = G;
  auto it = std::find(H.fixed.begin(), H.fixed.end(), v);
  if (it == H.fixed.end()) throw std::invalid_argument("not a fixed point: " + to_string(v));
  H.fixed.erase(it);
  ParamForm up = v + c * Rational(m), down = v - c * Rational(n);
  Rational vu = up.eval(p), vd = down.eval(p);
  bool seen_up = false, seen_down = false;
  for (auto& e : H.edges) {
    if (e.lo == v) {
      if (e.isotropy != m) throw std::invalid_argument("upward edge isotropy differs from m");
      if (!(e.hi.eval(p) > vu)) throw std::invalid_argument("blow-up size too large");
      e.lo = up;
      seen_up = true;
    } else if (e.hi == v) {
      if (e.isotropy != n) throw std::invalid_argument("downward edge isotropy differs from n");
      if (!(e.lo.eval(p) < vd)) throw std::invalid_argument("blow-up size too large");
      e.hi = down;
      seen_down = true;
    }
  }
  if ((m >= 2 && !seen_up) || (n >= 2 && !seen_down))
    throw std::invalid_argument("weights do not match the edges at the fixed point");
  auto in_range = [&](const ParamForm& x) {
    Rational t = x.eval(p);
    for (const auto& f : H.fat)
      if (f.moment.eval(p) == t) return false;
    return true;
  };
  if (!in_range(up) || !in_range(down)) throw std::invalid_argument("blow-up size too large");
  H.fixed.push_back(up);
  H.fixed.push_back(down);
  H.edges.push_back({down, up, m + n});
  return normalize(H, p);
}

std::string NamedAction::name() const {
  return (sign < 0 ? "-" : "") + z_name(k, X);
}

KarshonGraph named_graph(int k, const IndexSet& X) {
  IndexSet Xc = complement(X);
  H2Class bot = H2Class::B() - k * H2Class::F(), top = H2Class::B() + k * H2Class::F();
  for (int i : X) bot -= H2Class::E(i);
  for (int i : Xc) top -= H2Class::E(i);
  KarshonGraph G;
  G.fat.push_back({ParamForm(), area(bot), 0, bot});
  G.fat.push_back({ParamForm(1), area(top), 0, top});
  for (int i : X) G.fixed.push_back(ParamForm::c(i));
  for (int i : Xc) G.fixed.push_back(ParamForm(1) - ParamForm::c(i));
  return normalize(G, generic_point());
}

bool exists_at(int k, const IndexSet& X, const ParamPoint& p) {
  KarshonGraph G = named_graph(k, X);
  for (const auto& f : G.fat)
    if (!f.area.positive_at(p)) return false;
  for (const auto& x : G.fixed)
    if (!x.positive_at(p)) return false;
  return true;
}

Enumeration enumerate_MA_actions(const Rational& mu) {
  ParamPoint p = ma_point(mu);
  Enumeration out;
  Rational twice = 2 * mu;
  long kmax = mpz_class(twice.get_num() / twice.get_den()).get_si() / 2 + 2;
  for (int k = 0; k <= kmax; ++k) {
    for (const auto& X : all_subsets()) {
      bool labels = exists_at(k, X, p);
      bool stated = mu > Rational(k) + rat(static_cast<long>(X.size()), 2);
      if (stated != labels)
        out.warnings.push_back(z_name(k, X) + ": stated criterion mu > " +
                               to_string(Rational(k) + rat(static_cast<long>(X.size()), 2)) +
                               " gives " + (stated ? "exists" : "absent") +
                               ", area labels give " + (labels ? "exists" : "absent") +
                               " at mu = " + to_string(mu));
      if (!labels) continue;
      KarshonGraph G = named_graph(k, X);
      bool dup = false;
      for (const auto& [a, H] : out.actions)
        if (graphs_equal(G, H, p) != GraphRelation::Distinct) dup = true;
      if (!dup) out.actions.push_back({NamedAction{k, X, 1}, normalize(G, p)});
    }
  }
  return out;
}

std::optional<NamedAction> identify(const KarshonGraph& G, const ParamPoint& p, int kmax) {
  std::optional<NamedAction> flipped;
  for (int k = 0; k <= kmax; ++k)
    for (const auto& X : all_subsets()) {
      auto r = graphs_equal(G, named_graph(k, X), p);
      if (r == GraphRelation::Equal) return NamedAction{k, X, 1};
      if (r == GraphRelation::FlipEqual && !flipped) flipped = NamedAction{k, X, -1};
    }
  return flipped;
}

std::string to_string(const KarshonGraph& G) {
  std::string s;
  for (const auto& f : G.fat) s += fat_string(f) + "\n";
  for (const auto& x : G.fixed) s += "fixed(" + to_string(x) + ")\n";
  for (const auto& e : G.edges) s += edge_string(e) + "\n";
  return s;
}

}  // namespace torusloops
