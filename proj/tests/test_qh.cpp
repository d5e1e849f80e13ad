#include "support.hpp"

#include "torusloops/qh.hpp"

#include <random>

using namespace tl_test;

namespace {

using S = Series<RationalExponents>;
const RationalExponents pol{};

QHRational cls(const H2Class& a, const Rational& fl) { return QHRational::of_class(pol, fl, a, 1, Rational(0)); }
QHRational tpow(const Rational& e, const Rational& fl, const Rational& c = 1) { return QHRational::scalar(pol, fl, e, c); }

H2Class C(const char* s) { return parse_class(s); }

}  // namespace

TEST(Series, MonomialArithmetic) {
  S a = S::monomial(pol, -10, rat(-1, 2), 3), b = S::monomial(pol, -10, rat(-1, 2), -3);
  EXPECT_TRUE((a + b).is_zero());
  S c = a * S::monomial(pol, -10, Rational(-2));
  EXPECT_EQ(c.coef(rat(-5, 2)), 3);
  EXPECT_EQ(to_string(S::monomial(pol, -10, Rational(1)) - S::monomial(pol, -10, Rational(-1), 2)),
            "t^(1) - 2*t^(-1)");
}

TEST(Series, TruncationBelowFloor) {
  S a = S::monomial(pol, -3, Rational(-1)) * S::monomial(pol, -3, Rational(-5, 2));
  EXPECT_TRUE(a.is_zero());
  ASSERT_TRUE(a.valid().has_value());
  EXPECT_EQ(*a.valid(), Rational(-3));
}

TEST(Series, GeometricExpansion) {
  S g = geom_expand(rat(1), rat(-5, 2));
  EXPECT_EQ(to_string(g), "t^(0) + t^(-1) + t^(-2)");
  EXPECT_THROW(geom_expand(rat(0), rat(-1)), std::domain_error);
  EXPECT_THROW(geom_expand(rat(-1, 3), rat(-1)), std::domain_error);
}

TEST(SeriesProperties, GeometricInversion) {
  std::mt19937 gen(11);
  for (int n = 0; n < 100; ++n) {
    Rational w = rat(std::uniform_int_distribution<int>(1, 40)(gen), std::uniform_int_distribution<int>(1, 9)(gen));
    Rational fl = -rat(std::uniform_int_distribution<int>(10, 80)(gen), 3);
    S one = S::monomial(pol, fl, Rational(0)) - S::monomial(pol, fl, -w);
    S prod = (one * geom_expand(w, fl)).trusted();
    S want = S::monomial(pol, fl, Rational(0));
    // everything at or above the validity bound is exact
    for (const auto& [e, c] : prod.terms()) EXPECT_EQ(c, want.coef(e)) << to_string(w) << " " << to_string(e);
    EXPECT_EQ(prod.coef(Rational(0)), 1);
    ASSERT_TRUE(prod.valid());
    EXPECT_LE(*prod.valid(), fl + w);
  }
}

TEST(SeriesProperties, SpecializeCommutesWithProduct) {
  ParamPoint p = ma_point(rat(7, 4));
  FormExponents fp{make_point(rat(7, 4), rat(11, 20), rat(2, 5), rat(7, 20), rat(3, 10))};
  ParamForm w1 = f("mu - c1 - c2"), w2 = f("mu + 1 - c1 - c2 - c3 - c4");
  Rational fl = -12;
  auto gf = geom_expand(fp, w1, fl) * geom_expand(fp, w2, fl);
  auto gr = geom_expand(w1.eval(p), fl) * geom_expand(w2.eval(p), fl);
  auto sp = specialize(gf, p, fl);
  // on the common exact range the two agree
  Rational bound = max_of(*gr.valid(), rat(-6));
  for (const auto& [e, c] : gr.terms())
    if (e >= bound) EXPECT_EQ(sp.coef(e), c) << to_string(e);
}

TEST(QuantumProduct, ContributionTableSizes) {
  const auto& t = contribution_table();
  EXPECT_EQ(t.exceptional.size(), 16u);
  EXPECT_EQ(t.conic.size(), 10u);
  for (const auto& A : t.exceptional) {
    EXPECT_EQ(chern(A), 1);
    EXPECT_EQ(intersect(A, A), -1);
  }
  for (const auto& A : t.conic) {
    EXPECT_EQ(chern(A), 2);
    EXPECT_EQ(intersect(A, A), 0);
  }
}

// E2 is the exceptional class V3 of the plane model; its square, class by class.
TEST(QuantumProduct, SquareOfAnExceptionalClass) {
  ParamPoint p = generic_point();
  Rational fl = -40;
  const char* V[] = {"B - E1", "F - E1", "E2", "E3", "E4"};
  const char* L = "B + F - E1";
  auto lv = [&](int j) { return C(V[j - 1]); };
  QHRational want = QHRational(pol, fl);
  want.add(QHKey{QHKind::Pt, 0, 0}, S::monomial(pol, fl, Rational(0)), -1);
  auto term = [&](const H2Class& A, bool conic) {
    S s = S::monomial(pol, fl, -area(A, p));
    if (conic)
      want.add(QHKey{QHKind::X, 0, 0}, s);
    else
      want.add_class(A, 0, s);
  };
  term(lv(3), false);
  for (int k : {1, 2, 4, 5}) term(C(L) - lv(3) - lv(k), false);
  term(2 * C(L) - lv(1) - lv(2) - lv(3) - lv(4) - lv(5), false);
  term(C(L) - lv(3), true);
  for (int j : {1, 2, 4, 5}) {
    H2Class A = 2 * C(L);
    for (int i = 1; i <= 5; ++i)
      if (i != j) A = A - lv(i);
    term(A, true);
  }
  QHRational got = qh_mul(cls(H2Class::E(2), fl), cls(H2Class::E(2), fl), p);
  EXPECT_TRUE(qh_equal(got, want, true)) << to_string(got - want);
  // [A] q has degree 4, and so has the product
  EXPECT_EQ(got.degree(), std::optional<int>(4));
}

TEST(QuantumProduct, NamedRegressionB12B34) {
  for (const char* m : {"2", "7/4"}) {
    ParamPoint p = ma_point(r(m));
    Rational fl = -20, mu = p.mu;
    QHRational got = qh_mul(cls(C("B - E1 - E2"), fl), cls(C("B - E3 - E4"), fl), p);
    // X t^{-1} (1 - t^{1-mu})^2
    QHRational want = tpow(-1, fl) - tpow(-mu, fl, 2) + tpow(1 - 2 * mu, fl);
    EXPECT_TRUE(qh_equal(got, want, true)) << m << "\n" << to_string(got);
  }
  ParamPoint p = ma2();
  QHRational got = qh_mul(cls(C("B - E1 - E2"), -20), cls(C("B - E3 - E4"), -20), p).forget_q();
  EXPECT_EQ(to_string(got), "X*q^0: t^(-1) - 2*t^(-2) + t^(-3)");
}

TEST(QuantumProduct, RingRelations) {
  for (const char* m : {"2", "7/4"})
    for (int id = 1; id <= 10; ++id) {
      RingRelationReport rep = check_ring_relation(id, {1, 2, 3, 4}, ma_point(r(m)), -20);
      EXPECT_TRUE(rep.zero) << "relation " << id << " at mu = " << m << "\n" << to_string(rep.diff);
    }
}

TEST(QuantumProduct, RingRelationsAllIndexOrders) {
  std::array<int, 4> ijkl = {1, 2, 3, 4};
  do {
    for (int id = 1; id <= 10; ++id)
      EXPECT_TRUE(check_ring_relation(id, ijkl, ma2(), -12).zero) << id;
  } while (std::next_permutation(ijkl.begin(), ijkl.end()));
}

TEST(QuantumProduct, LiteralReadingsDiffer) {
  RingRelationReport r7 = check_ring_relation(7, {1, 2, 3, 4}, ma2(), -20);
  ASSERT_TRUE(r7.literal_diff.has_value());
  EXPECT_FALSE(r7.literal_diff->is_zero());
  EXPECT_FALSE(r7.literal_note.empty());
  EXPECT_THROW(check_ring_relation(1, {1, 1, 3, 4}, ma2(), -20), std::invalid_argument);
}

TEST(QuantumProduct, PointFactorIsRejected) {
  QHRational pt(pol, -10);
  pt.add(QHKey{QHKind::Pt, 0, 0}, S::monomial(pol, -10, Rational(0)));
  EXPECT_THROW(qh_mul(pt, cls(H2Class::B(), -10), ma2()), std::domain_error);
}

// properties

TEST(QuantumProperties, CommutativityAndUnit) {
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> d(-2, 2);
  ParamPoint p = generic_point();
  Rational fl = -30;
  auto random_element = [&] {
    QHRational u(pol, fl);
    for (int n = 0; n < 3; ++n) {
      H2Class a;
      for (auto& x : a.v) x = d(gen);
      u.add_class(a, 0, S::monomial(pol, fl, rat(d(gen), 3), rat(d(gen) + 3)));
    }
    u += tpow(rat(d(gen), 2), fl, rat(d(gen)));
    return u;
  };
  QHRational one = tpow(0, fl);
  for (int n = 0; n < 30; ++n) {
    QHRational u = random_element(), v = random_element();
    EXPECT_TRUE(qh_equal(qh_mul(u, v, p), qh_mul(v, u, p), false));
    EXPECT_TRUE(qh_equal(qh_mul(one, u, p), u, false));
    EXPECT_TRUE(qh_equal(qh_mul(u, one, p), u, false));
  }
}

TEST(QuantumProperties, Distributivity) {
  ParamPoint p = generic_point();
  Rational fl = -30;
  QHRational a = cls(C("B - E1"), fl), b = cls(C("F - E2 - E3"), fl), c = cls(H2Class::E(4), fl) + tpow(-1, fl);
  EXPECT_TRUE(qh_equal(qh_mul(a, b + c, p), qh_mul(a, b, p) + qh_mul(a, c, p), false));
}
