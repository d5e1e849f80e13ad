#include "torusloops/qh.hpp"

#include <set>

namespace torusloops {

const ContributionTable& contribution_table() {
  static const ContributionTable table = [] {
    ContributionTable t;
    H2Class L = lv_line();
    auto V = [](int j) { return lv_exceptional(j); };
    for (int j = 1; j <= 5; ++j) t.exceptional.push_back(V(j));
    for (int j = 1; j <= 5; ++j)
      for (int k = j + 1; k <= 5; ++k) t.exceptional.push_back(L - V(j) - V(k));
    H2Class twoL = 2 * L;
    H2Class all = twoL;
    for (int j = 1; j <= 5; ++j) all -= V(j);
    t.exceptional.push_back(all);
    for (int j = 1; j <= 5; ++j) t.conic.push_back(L - V(j));
    for (int j = 1; j <= 5; ++j) t.conic.push_back(all + V(j));
    return t;
  }();
  return table;
}

std::string key_label(const QHKey& k) {
  static const char* names[] = {"B", "F", "E1", "E2", "E3", "E4"};
  std::string c = k.kind == QHKind::Pt ? "pt" : k.kind == QHKind::X ? "X" : names[k.index];
  return c + "*q^" + std::to_string(k.q);
}

namespace {

struct RingBuilder {
  ParamPoint p;
  Rational floor;
  RationalExponents pol{};

  QHRational cls(const H2Class& a) const { return QHRational::of_class(pol, floor, a, 1, Rational(0)); }
  QHRational f(int i, int j) const { return cls(H2Class::F() - H2Class::E(i) - H2Class::E(j)); }
  QHRational b(int i, int j) const { return cls(H2Class::B() - H2Class::E(i) - H2Class::E(j)); }
  QHRational e(int i) const { return cls(H2Class::E(i)); }
  QHRational T(const Rational& x) const { return QHRational::scalar(pol, floor, x); }
  QHRational mul(const QHRational& u, const QHRational& v) const { return qh_mul(u, v, p); }
  QHRational zero() const { return QHRational(pol, floor); }
};

}  // namespace

RingRelationReport check_ring_relation(int id, std::array<int, 4> ijkl, const ParamPoint& p,
                                       const Rational& floor) {
  std::set<int> distinct(ijkl.begin(), ijkl.end());
  if (distinct.size() != 4 || *distinct.begin() < 1 || *distinct.rbegin() > 4)
    throw std::invalid_argument("indices must be a permutation of 1..4");
  auto [i, j, k, l] = ijkl;
  RingBuilder R{p, floor};
  const Rational h = rat(1, 2), mu = p.mu;
  // t^{-mu}(1 - t^{1-mu})
  QHRational pre = R.T(-mu) - R.T(1 - 2 * mu);
  QHRational lhs = R.zero(), rhs = R.zero();
  RingRelationReport rep;
  rep.id = id;
  rep.reading = "as printed";
  switch (id) {
    case 1:
      rep.statement = "f_ik (b_ij + t^{-1/2}(1 - t^{1-mu})) = 0";
      lhs = R.mul(R.f(i, k), R.b(i, j) + R.T(-h) - R.T(-h + 1 - mu));
      break;
    case 2:
      rep.statement = "b_ij b_kl = t^{-1}(1 - t^{1-mu})^2";
      lhs = R.mul(R.b(i, j), R.b(k, l));
      rhs = R.T(-1) - R.T(-mu).scaled(2) + R.T(1 - 2 * mu);
      break;
    case 3:
      rep.statement = "f_ij f_kl = 0";
      lhs = R.mul(R.f(i, j), R.f(k, l));
      break;
    case 4:
      rep.statement = "f_ij (e_k + t^{1/2-mu}) = 0";
      lhs = R.mul(R.f(i, j), R.e(k) + R.T(h - mu));
      break;
    case 5:
      rep.statement = "b_ij (f_ij + e_i + t^{1/2-mu}) = t^{-mu}(1 - 1t^{1-mu})(1 + e_j t^{mu-1/2})";
      rep.reading = "1t^{1-mu} read as t^{1-mu}";
      lhs = R.mul(R.b(i, j), R.f(i, j) + R.e(i) + R.T(h - mu));
      rhs = R.mul(pre, R.T(0) + R.mul(R.e(j), R.T(mu - h)));
      break;
    case 6:
      rep.statement = "b_ij (e_k + t^{1/2-mu}) = t^{-mu}(1 - t^{1-mu})(1 + (f_kj + e_j) t^{mu-1/2})";
      lhs = R.mul(R.b(i, j), R.e(k) + R.T(h - mu));
      rhs = R.mul(pre, R.T(0) + R.mul(R.f(k, j) + R.e(j), R.T(mu - h)));
      break;
    case 7:
      rep.statement = "f_ij (b_ij + e_i + y^{-1/2}) = 0";
      rep.reading = "y read as t";
      lhs = R.mul(R.f(i, j), R.b(i, j) + R.e(i) + R.T(-h));
      break;
    case 8:
      rep.statement = "f_ij (f_ik + e_i + t^{1/2-mu}) = 0";
      lhs = R.mul(R.f(i, j), R.f(i, k) + R.e(i) + R.T(h - mu));
      break;
    case 9:
      rep.statement = "e_i^2 = f_ij f_ik + (e_l - e_i) t^{1/2-mu} + e_i e_l";
      lhs = R.mul(R.e(i), R.e(i));
      rhs = R.mul(R.f(i, j), R.f(i, k)) + R.mul(R.e(l) - R.e(i), R.T(h - mu)) + R.mul(R.e(i), R.e(l));
      break;
    case 10:
      rep.statement = "f_ij^2 = f_ij (f_ik + f_il)";
      lhs = R.mul(R.f(i, j), R.f(i, j));
      rhs = R.mul(R.f(i, j), R.f(i, k) + R.f(i, l));
      break;
    default:
      throw std::invalid_argument("relation id must be in 1..10");
  }
  rep.diff = (lhs - rhs).forget_q();
  rep.zero = rep.diff.is_zero();
  if (id == 5) {
    rep.literal_note = "the literal factor (1 - 1t^{1-mu}) equals (1 - t^{1-mu}); both readings agree";
    rep.literal_diff = rep.diff;
  } else if (id == 7) {
    rep.literal_note =
        "y is not defined in the text; literal_diff is f_ij (b_ij + e_i), the part that f_ij y^{-1/2} "
        "has to cancel";
    rep.literal_diff = R.mul(R.f(i, j), R.b(i, j) + R.e(i)).forget_q();
  }
  return rep;
}

}  // namespace torusloops
