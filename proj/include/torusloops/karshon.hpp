#pragma once

#include "torusloops/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusloops {

struct FatVertex {
  ParamForm moment;
  ParamForm area;
  int genus = 0;
  std::optional<H2Class> cls;
  bool operator==(const FatVertex&) const = default;
};

// Endpoints are referenced by their moments, lower one first.
struct GraphEdge {
  ParamForm lo, hi;
  int isotropy = 2;
  bool operator==(const GraphEdge&) const = default;
};

struct KarshonGraph {
  std::vector<FatVertex> fat;
  std::vector<ParamForm> fixed;
  std::vector<GraphEdge> edges;
  bool operator==(const KarshonGraph&) const = default;
};

enum class GraphRelation { Equal, FlipEqual, Distinct };
std::string to_string(GraphRelation r);

// Translate the minimum to 0 and sort everything by value at p.
KarshonGraph normalize(const KarshonGraph& G, const ParamPoint& p);
KarshonGraph flip(const KarshonGraph& G, const ParamPoint& p);
KarshonGraph translate(const KarshonGraph& G, const ParamForm& by);
KarshonGraph strip_classes(const KarshonGraph& G);

// Moment of the projection along xi; the returned graph is normalized at p.
KarshonGraph project(const DelzantPolytope& P, const Vec2& xi, const ParamPoint& p);
GraphRelation graphs_equal(const KarshonGraph& G, const KarshonGraph& H, const ParamPoint& p);
// First differing label, empty when equal after normalization.
std::string graph_diff(const KarshonGraph& G, const KarshonGraph& H, const ParamPoint& p);

KarshonGraph blowup_min_surface(const KarshonGraph& G, const ParamForm& c, const ParamPoint& p);
// m: isotropy of the edge going up from v, n: going down; 1 means no drawn edge.
KarshonGraph blowup_interior(const KarshonGraph& G, const ParamForm& v, int m, int n,
                             const ParamForm& c, const ParamPoint& p);

struct NamedAction {
  int k = 0;
  IndexSet X;
  int sign = 1;
  std::string name() const;
  bool operator==(const NamedAction&) const = default;
};

// The generic-case graph of z_{k,X}.
KarshonGraph named_graph(int k, const IndexSet& X);
bool exists_at(int k, const IndexSet& X, const ParamPoint& p);

struct Enumeration {
  std::vector<std::pair<NamedAction, KarshonGraph>> actions;
  std::vector<std::string> warnings;
};
Enumeration enumerate_MA_actions(const Rational& mu);

std::optional<NamedAction> identify(const KarshonGraph& G, const ParamPoint& p, int kmax = 6);

std::string to_string(const KarshonGraph& G);

}  // namespace torusloops
