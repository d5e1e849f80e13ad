#include "support.hpp"

#include "torusloops/catalog.hpp"
#include "torusloops/karshon.hpp"

using namespace tl_test;

namespace {

const ParamPoint P = generic_point();

void expect_drawn(const KarshonGraph& got, const KarshonGraph& want) {
  EXPECT_EQ(graphs_equal(got, want, P), GraphRelation::Equal) << graph_diff(got, want, P) << "\n" << to_string(normalize(got, P));
}

KarshonGraph x_of(const std::string& name, std::vector<int> params = {}) {
  return project(catalog(name, params).polytope, {1, 0}, P);
}
KarshonGraph y_of(const std::string& name, std::vector<int> params = {}) {
  return project(catalog(name, params).polytope, {0, 1}, P);
}

}  // namespace

TEST(DrawnGraphs, ZkFromTk) {
  for (int k : {1, 2, 3}) {
    std::string K = std::to_string(k);
    expect_drawn(x_of("T_k", {k}), drawn({{"1", "mu + " + K + " - c1 - c2 - c3 - c4", "B + " + K + "F - E1 - E2 - E3 - E4"},
                                          {"0", "mu - " + K, "B - " + K + "F"}},
                                         {"1 - c4", "1 - c3", "1 - c2", "1 - c1"}, {}));
  }
}

TEST(DrawnGraphs, WkFromTk) {
  // all drawn weights k, k-1, ..., k-4 are at least 2 once k >= 6
  for (int k : {6, 7}) {
    std::string K = std::to_string(k);
    expect_drawn(y_of("T_k", {k}),
                 drawn({},
                       {"mu", "mu - " + K, "0", "-" + K + " + " + K + "c1", "-" + K + " + " + K + "c2 + c1 - c2",
                        "-" + K + " + " + K + "c3 + c1 + c2 - 2c3", "-" + K + " + " + K + "c4 + c1 + c2 + c3 - 3c4",
                        "-" + K + " + c1 + c2 + c3 + c4"},
                       {{"mu - " + K, "mu", k},
                        {"-" + K + " + " + K + "c1", "0", k},
                        {"-" + K + " + " + K + "c2 + c1 - c2", "-" + K + " + " + K + "c1", k - 1},
                        {"-" + K + " + " + K + "c3 + c1 + c2 - 2c3", "-" + K + " + " + K + "c2 + c1 - c2", k - 2},
                        {"-" + K + " + " + K + "c4 + c1 + c2 + c3 - 3c4", "-" + K + " + " + K + "c3 + c1 + c2 - 2c3", k - 3},
                        {"-" + K + " + c1 + c2 + c3 + c4", "-" + K + " + " + K + "c4 + c1 + c2 + c3 - 3c4", k - 4}}));
  }
}

TEST(DrawnGraphs, Z0AndY0) {
  expect_drawn(x_of("T_0"), drawn({{"1", "mu - c1 - c2 - c3 - c4", "B - E1 - E2 - E3 - E4"}, {"0", "mu", "B"}},
                                  {"1 - c4", "1 - c3", "1 - c2", "1 - c1"}, {}));
  // the top label is printed as "1, mu": area first there
  expect_drawn(y_of("T_0"), drawn({{"mu", "1", "F"}, {"0", "1 - c1", "F - E1"}},
                                  {"c1 + c2 + c3 + c4", "c1 + c2 + c3 - 3c4", "c1 + c2 - 2c3", "c1 - c2"},
                                  {{"c1 - c2", "c1 + c2 - 2c3", 2},
                                   {"c1 + c2 - 2c3", "c1 + c2 + c3 - 3c4", 3},
                                   {"c1 + c2 + c3 - 3c4", "c1 + c2 + c3 + c4", 4}}));
}

TEST(DrawnGraphs, Zk4AndWk4) {
  for (int k : {1, 2}) {
    std::string K = std::to_string(k);
    expect_drawn(x_of("T_{k,4}", {k}), drawn({{"1", "mu + " + K + " - c1 - c2 - c3", "B + " + K + "F - E1 - E2 - E3"},
                                              {"0", "mu - " + K + " - c4", "B - " + K + "F - E4"}},
                                             {"1 - c3", "1 - c2", "1 - c1", "c4"}, {}));
  }
  for (int k : {5, 6}) {
    std::string K = std::to_string(k);
    std::string a = "c4", b = "-" + K + "c4", c = "-" + K + " + " + K + "c1",
                d = "-" + K + " + " + K + "c2 + c1 - c2", e = "-" + K + " + " + K + "c3 + c1 + c2 - 2c3",
                g = "-" + K + " + c1 + c2 + c3";
    expect_drawn(y_of("T_{k,4}", {k}),
                 drawn({}, {"mu", "mu - " + K, a, b, c, d, e, g},
                       {{"mu - " + K, "mu", k}, {b, a, k + 1}, {c, b, k}, {d, c, k - 1}, {e, d, k - 2}, {g, e, k - 3}}));
  }
}

TEST(DrawnGraphs, Z04AndY04) {
  expect_drawn(x_of("T_{0,4}"), drawn({{"1", "mu - c1 - c2 - c3", "B - E1 - E2 - E3"}, {"0", "mu - c4", "B - E4"}},
                                      {"1 - c3", "1 - c2", "1 - c1", "c4"}, {}));
  // bottom class printed as F - E1; the area label 1 - c1 - c4 is that of F - E1 - E4
  expect_drawn(y_of("T_{0,4}"), drawn({{"mu", "1", "F"}, {"0", "1 - c1 - c4", "F - E1 - E4"}},
                                      {"c1 + c2 + c3", "c1 + c2 - 2c3", "c1 - c2", "c4"},
                                      {{"c1 - c2", "c1 + c2 - 2c3", 2}, {"c1 + c2 - 2c3", "c1 + c2 + c3", 3}}));
}

TEST(DrawnGraphs, Z1FromT1) {
  expect_drawn(x_of("T_1"), drawn({{"1", "mu + 1 - c1 - c2 - c3 - c4", "B + F - E1 - E2 - E3 - E4"},
                                   {"0", "mu - 1", "B - F"}},
                                  {"1 - c4", "1 - c3", "1 - c2", "1 - c1"}, {}));
}

TEST(DrawnGraphs, Z14AndS14) {
  expect_drawn(x_of("Z14"), drawn({{"1", "mu + 1 - c1 - c2 - c3", "B + F - E1 - E2 - E3"},
                                   {"0", "mu - 1 - c4", "B - F - E4"}},
                                  {"1 - c3", "1 - c2", "1 - c1", "c4"}, {}));
  expect_drawn(y_of("Z14"), drawn({{"mu - c1", "c1 - c2", "E1 - E2"}, {"-1 + c3", "c3", "E3"}},
                                  {"mu - c1 - c2", "mu - 1", "c4", "-c4"}, {{"-c4", "c4", 2}}));
}

TEST(DrawnGraphs, TransformedAuxiliaryPolytopes) {
  auto heights = [](const DelzantPolytope& Q) {
    std::vector<ParamForm> ys;
    for (const auto& v : vertices(Q)) ys.push_back(v.second);
    std::sort(ys.begin(), ys.end(), ValueOrder{&P});
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    return ys;
  };
  auto sorted = [](std::vector<std::string> s) {
    std::vector<ParamForm> ys;
    for (const auto& x : s) ys.push_back(f(x));
    std::sort(ys.begin(), ys.end(), ValueOrder{&P});
    return ys;
  };
  auto shifted = [](std::vector<ParamForm> ys) {
    ParamForm lo = ys.front();
    for (auto& y : ys) y = y - lo;
    return ys;
  };
  Mat2 M{1, 0, 1, 1};
  EXPECT_EQ(shifted(heights(gl2_transform(catalog("AUX14").polytope, M))),
            shifted(sorted({"c3", "1 - c4", "1 + c4", "mu", "mu + 1 - c1", "mu + 1 - c1 - c2"})));
  EXPECT_EQ(shifted(heights(gl2_transform(catalog("NEF14").polytope, M))),
            shifted(sorted({"0", "c4", "c3", "mu - 1", "mu + 1 - 2c1", "mu + 1 - c1 - c2"})));
  // its y projection is s_{1,4} up to translation
  KarshonGraph s14 = drawn({{"mu - c1", "c1 - c2", "E1 - E2"}, {"-1 + c3", "c3", "E3"}},
                           {"mu - c1 - c2", "mu - 1", "c4", "-c4"}, {{"-c4", "c4", 2}});
  expect_drawn(project(gl2_transform(catalog("AUX14").polytope, M), {0, 1}, P), s14);
}

TEST(DrawnGraphs, C1AndC14) {
  KarshonGraph c1 = drawn({{"mu - c1", "c1 - c2", ""}, {"-1 + c4", "c4", ""}},
                          {"mu - c1 - c2 + c3", "mu - c1 - c2 - c3", "mu - 1", "0"},
                          {{"mu - c1 - c2 - c3", "mu - c1 - c2 + c3", 2}});
  KarshonGraph c14 = drawn({{"mu - c1", "c1 - c2", ""}},
                           {"mu - c1 - c2 + c3", "mu - c1 - c2 - c3", "mu - 1", "c4", "-c4", "-1"},
                           {{"mu - c1 - c2 - c3", "mu - c1 - c2 + c3", 2}, {"-c4", "c4", 2}});
  expect_drawn(strip_classes(y_of("C1")), c1);
  expect_drawn(strip_classes(y_of("C14")), c14);
}

TEST(DrawnGraphs, CatalogPolytopesAreValid) {
  for (const auto& e : catalog_instances()) {
    EXPECT_TRUE(check_delzant(e.polytope, P).ok) << e.name << ": " << check_delzant(e.polytope, P).message;
    EXPECT_TRUE(verify_facet_classes(e.polytope).ok) << e.name << ": " << verify_facet_classes(e.polytope).message;
  }
}

TEST(Enumeration, CountsOnTheEdge) {
  EXPECT_EQ(enumerate_MA_actions(r("6/5")).actions.size(), 4u);
  EXPECT_EQ(enumerate_MA_actions(r("8/5")).actions.size(), 12u);
  EXPECT_EQ(enumerate_MA_actions(r("21/10")).actions.size(), 20u);
  EXPECT_EQ(enumerate_MA_actions(r("13/5")).actions.size(), 28u);
}

TEST(Enumeration, FirstActionsBelowThreeHalves) {
  std::vector<std::string> names;
  for (const auto& [a, g] : enumerate_MA_actions(r("3/2")).actions) names.push_back(a.name());
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"z_1", "z_{0,12}", "z_{0,13}", "z_{0,14}"}));
}

TEST(Enumeration, KZeroDisagreementIsAWarning) {
  auto e = enumerate_MA_actions(r("5/4"));
  EXPECT_FALSE(e.warnings.empty());
  for (const auto& w : e.warnings) EXPECT_TRUE(w.rfind("z_0", 0) == 0 || w.rfind("z_{0,", 0) == 0) << w;
}

TEST(DrawnGraphs, GenericNamedGraphs) {
  for (int k = 0; k <= 3; ++k)
    for (const auto& X : all_subsets()) {
      std::string K = std::to_string(k), top_area = "mu + " + K, top_cls = "B + " + K + "F",
                  bot_area = "mu - " + K, bot_cls = "B - " + K + "F";
      std::vector<std::string> fixed;
      for (int m = 1; m <= 4; ++m) {
        std::string M = std::to_string(m);
        if (std::find(X.begin(), X.end(), m) != X.end()) {
          bot_area += " - c" + M, bot_cls += " - E" + M, fixed.push_back("c" + M);
        } else {
          top_area += " - c" + M, top_cls += " - E" + M, fixed.push_back("1 - c" + M);
        }
      }
      expect_drawn(named_graph(k, X), drawn({{"1", top_area, top_cls}, {"0", bot_area, bot_cls}}, fixed, {}));
    }
}

// properties

TEST(GraphProperties, TranslationAndFlipInvariance) {
  for (const auto& e : catalog_instances()) {
    for (Vec2 xi : {Vec2{1, 0}, Vec2{0, 1}}) {
      KarshonGraph G;
      try {
        G = project(e.polytope, xi, P);
      } catch (const std::domain_error&) {
        continue;
      }
      for (const char* s : {"1", "mu - c2", "-3/7 + 2c4"}) {
        KarshonGraph T = translate(G, f(s));
        EXPECT_EQ(graphs_equal(G, T, P), GraphRelation::Equal) << e.name;
        KarshonGraph F = flip(T, P);
        GraphRelation rf = graphs_equal(G, F, P);
        EXPECT_NE(rf, GraphRelation::Distinct) << e.name;
        EXPECT_EQ(graphs_equal(F, G, P), rf) << e.name;
        EXPECT_EQ(graphs_equal(flip(F, P), G, P), GraphRelation::Equal) << e.name;
      }
    }
  }
}

TEST(GraphProperties, ProjectionAlongOppositeDirectionIsTheFlip) {
  for (const auto& e : catalog_instances()) {
    KarshonGraph G, H;
    try {
      G = project(e.polytope, {1, 0}, P);
      H = project(e.polytope, {-1, 0}, P);
    } catch (const std::domain_error&) {
      continue;
    }
    EXPECT_EQ(normalize(flip(G, P), P), normalize(H, P)) << e.name;
  }
}
