#include "support.hpp"

#include "torusloops/lattice.hpp"

using namespace tl_test;

namespace {

LoopExpr z(const std::string& s, long c = 1) { return LoopExpr(s, c); }

// The basis table, written out with t = z_{0,12} + z_{0,13} - z_{0,14}.
LoopExpr table(int k, const IndexSet& X) {
  LoopExpr z1 = z("z_1"), z14 = z("z_{1,4}"), t = z("z_{0,12}") + z("z_{0,13}") - z("z_{0,14}");
  auto z0ij = [&](const std::string& ij) -> LoopExpr {
    if (ij == "23") return -1 * z("z_{0,14}");
    if (ij == "24") return -1 * z("z_{0,13}");
    if (ij == "34") return -1 * z("z_{0,12}");
    return z("z_{0," + ij + "}");
  };
  long K = k;
  std::string s = index_string(X);
  if (s.empty()) return (2 - K) * z1 + (K - 1) * (2 * z14 + t);
  if (s.size() == 2) return 2 * K * z14 - K * z1 + K * t + z0ij(s);
  LoopExpr one = (2 * K - 1) * z14 + (1 - K) * z1;
  if (s == "1") return one + K * t + z("z_{0,14}");
  if (s == "2") return one + K * t - z("z_{0,13}");
  if (s == "3") return one + K * t - z("z_{0,12}");
  if (s == "4") return one + (K - 1) * t;
  LoopExpr three = (2 * K + 1) * z14 - (K + 1) * z1;
  if (s == "124") return three + K * t + z("z_{0,12}");
  if (s == "134") return three + K * t + z("z_{0,13}");
  if (s == "234") return three + K * t - z("z_{0,14}");
  if (s == "123") return three + (K + 1) * t;
  return (2 * K + 2) * z14 - (K + 2) * z1 + (K + 1) * t;
}

class Lattice : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { report_ = new LatticeReport(reduce_to_basis(generic_point(), 4)); }
  static void TearDownTestSuite() { delete report_; }
  static const LatticeReport& rep() { return *report_; }
  static LatticeReport* report_;
};
LatticeReport* Lattice::report_ = nullptr;

}  // namespace

TEST(LoopExpr, Algebra) {
  LoopExpr a = z("x") + 2 * z("y");
  EXPECT_EQ((a - a).empty(), true);
  EXPECT_EQ(a.coef("y"), 2);
  EXPECT_EQ(a.coef("w"), 0);
  EXPECT_EQ(to_string(z("x") - 2 * z("y")), "x - 2*y");
}

TEST(RelationLattice, MembershipAndMultiplier) {
  // 2x = 2y, y = b
  RelationLattice L({2 * z("x") - 2 * z("y"), z("y") - z("b")}, {"x", "y", "b"}, {"b"});
  EXPECT_TRUE(L.contains(2 * z("x") - 2 * z("b")));
  EXPECT_FALSE(L.contains(z("x") - z("b")));
  EXPECT_EQ(L.multiplier(z("x") - z("b")), Integer(2));
  EXPECT_EQ(L.multiplier(z("y") - z("b")), Integer(1));
  EXPECT_FALSE(L.multiplier(z("x")).has_value());
  EXPECT_EQ(L.reduce("x"), z("b"));
  EXPECT_EQ(L.named_rank(), 1);
}

TEST(RelationLattice, ExpressionRank) {
  std::vector<std::string> B = {"a", "b", "c"};
  EXPECT_EQ(expression_rank({z("a") + z("b"), z("a") - z("b"), 2 * z("a")}, B), 2);
  EXPECT_EQ(expression_rank({z("a"), z("b"), z("c")}, B), 3);
  EXPECT_EQ(expression_rank({}, B), 0);
}

TEST(Certificates, BogusCoincidenceIsRejected) {
  Evidence ev{polytope_side("T_0", {}, 0), polytope_side("T_1", {}, 0), GraphRelation::Equal};
  EXPECT_FALSE(verify_relation(certificate("bogus", ev), generic_point()).ok);
}

TEST(Certificates, FlipOfZ012) {
  Evidence ev{named_side(0, {1, 2}), named_side(0, {3, 4}), GraphRelation::FlipEqual};
  VerifyResult v = verify_relation(certificate("flip", ev), generic_point());
  EXPECT_TRUE(v.ok) << v.detail;
}

TEST_F(Lattice, EveryCoincidenceHolds) {
  for (const auto& [c, v] : rep().atomic) EXPECT_TRUE(v.ok) << c.id << ": " << v.detail;
  EXPECT_GT(rep().atomic.size(), 100u);
}

TEST_F(Lattice, RankIsFive) {
  EXPECT_EQ(rep().rank, 5);
  EXPECT_TRUE(rep().unreduced.empty());
  EXPECT_TRUE(rep().all_ok);
}

TEST_F(Lattice, NamedIdentitiesAreCertified) {
  std::vector<std::string> wanted = {"firstequation", "auxiliary1", "result1", "result2", "result3", "result4",
                                     "result5", "relation2", "relation1", "basicz01", "basicz02", "basicz04",
                                     "basicrelations:"};
  for (const auto& w : wanted) {
    int seen = 0;
    for (const auto& d : rep().derived)
      if (d.id.rfind(w, 0) == 0) {
        ++seen;
        EXPECT_TRUE(d.certified) << d.id;
        EXPECT_TRUE(d.multiplier == 1 || d.multiplier == 2) << d.id << " " << d.multiplier;
      }
    EXPECT_GT(seen, 0) << w;
  }
}

TEST_F(Lattice, TableOfBasisExpressions) {
  for (int k = 0; k <= 3; ++k)
    for (const auto& X : all_subsets()) {
      std::string sym = z_name(k, X);
      if (k == 0 && X.size() == 2) continue;  // these are the flips, checked below
      auto it = rep().basis_expressions.find(sym);
      ASSERT_NE(it, rep().basis_expressions.end()) << sym;
      EXPECT_EQ(it->second, table(k, X)) << sym << ": " << to_string(it->second) << " vs " << to_string(table(k, X));
    }
  EXPECT_EQ(rep().basis_expressions.at("z_{0,23}"), -1 * z("z_{0,14}"));
  EXPECT_EQ(rep().basis_expressions.at("z_{0,24}"), -1 * z("z_{0,13}"));
  EXPECT_EQ(rep().basis_expressions.at("z_{0,34}"), -1 * z("z_{0,12}"));
}

TEST_F(Lattice, BasicRelations) {
  const auto& b = rep().basis_expressions;
  EXPECT_EQ(b.at("z_{0,1}"), z("z_1") - z("z_{1,4}") + z("z_{0,14}"));
  EXPECT_EQ(b.at("z_{0,2}"), z("z_1") - z("z_{1,4}") - z("z_{0,13}"));
  EXPECT_EQ(b.at("z_{0,3}"), z("z_1") - z("z_{1,4}") - z("z_{0,12}"));
  EXPECT_EQ(b.at("z_{0,4}"), z("z_1") - z("z_{1,4}") - z("z_{0,12}") - z("z_{0,13}") + z("z_{0,14}"));
  EXPECT_EQ(b.at("z_0"), 2 * z("z_1") - 2 * z("z_{1,4}") - z("z_{0,12}") - z("z_{0,13}") + z("z_{0,14}"));
}

TEST_F(Lattice, FalseRelationIsNotCertified) {
  RelationLattice L = [] {
    std::vector<LoopExpr> rels;
    for (const auto& [c, v] : rep().atomic) rels.push_back(c.lhs - c.rhs);
    return RelationLattice(rels, named_symbols(4), basis_symbols());
  }();
  EXPECT_FALSE(L.multiplier(z("z_1") - z("z_{1,4}")).has_value());
  EXPECT_FALSE(L.multiplier(z("z_{0,12}") + z("z_{0,34}") - z("z_1")).has_value());
  EXPECT_TRUE(L.contains(z("z_{0,12}") + z("z_{0,34}")));
}
