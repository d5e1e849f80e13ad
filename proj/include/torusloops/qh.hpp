#pragma once

#include "torusloops/homology.hpp"
#include "torusloops/series.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusloops {

enum class QHKind { Pt, H, X };

// Component label: pt, X, or the H2 basis vector `index` (B, F, E1..E4), times q^q.
struct QHKey {
  QHKind kind = QHKind::X;
  int index = 0;
  int q = 0;
  auto operator<=>(const QHKey&) const = default;
  int degree() const { return (kind == QHKind::Pt ? 0 : kind == QHKind::H ? 2 : 4) + 2 * q; }
};

// Classes with nonzero genus-0 invariants through two generic cycles.
struct ContributionTable {
  std::vector<H2Class> exceptional;  // 16 classes, c1 = 1
  std::vector<H2Class> conic;        // 10 classes, c1 = 2
};
const ContributionTable& contribution_table();

template <class Policy>
class QHElement {
 public:
  using S = Series<Policy>;
  using Exp = typename Policy::exponent;

  QHElement(Policy pol, Rational floor) : pol_(std::move(pol)), floor_(std::move(floor)) {}

  static QHElement of_class(Policy pol, Rational floor, const H2Class& a, int q, const Exp& e,
                            const Rational& coef = 1) {
    QHElement u(pol, floor);
    u.add_class(a, q, S::monomial(pol, floor, e, coef));
    return u;
  }
  static QHElement scalar(const S& s) {
    QHElement u(s.policy(), s.floor());
    u.add(QHKey{QHKind::X, 0, 0}, s);
    return u;
  }
  static QHElement scalar(Policy pol, Rational floor, const Exp& e, const Rational& coef = 1) {
    return scalar(S::monomial(pol, floor, e, coef));
  }

  const Policy& policy() const { return pol_; }
  const Rational& floor() const { return floor_; }
  const std::map<QHKey, S>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  void add(const QHKey& k, const S& s, const Rational& coef = 1) {
    if (s.is_zero()) return;
    auto it = comps_.find(k);
    if (it == comps_.end()) it = comps_.emplace(k, S(pol_, floor_)).first;
    it->second += s * coef;
    if (it->second.is_zero()) comps_.erase(it);
  }

  void add_class(const H2Class& a, int q, const S& s, const Rational& coef = 1) {
    for (int i = 0; i < 6; ++i)
      if (a.v[i] != 0) add(QHKey{QHKind::H, i, q}, s, coef * Rational(a.v[i]));
  }

  QHElement& operator+=(const QHElement& o) {
    for (const auto& [k, s] : o.comps_) add(k, s);
    return *this;
  }
  QHElement& operator-=(const QHElement& o) {
    for (const auto& [k, s] : o.comps_) add(k, s, -1);
    return *this;
  }
  friend QHElement operator+(QHElement a, const QHElement& b) { return a += b; }
  friend QHElement operator-(QHElement a, const QHElement& b) { return a -= b; }

  QHElement scaled(const Rational& k) const {
    QHElement out(pol_, floor_);
    for (const auto& [key, s] : comps_) out.add(key, s, k);
    return out;
  }

  // The H2 class of the q^q part carried by the monomial t^e, if there is one.
  H2Class class_at(int q, const Exp& e) const {
    H2Class a;
    for (const auto& [k, s] : comps_)
      if (k.kind == QHKind::H && k.q == q) {
        Rational c = s.coef(e);
        if (c.get_den() != 1) throw std::domain_error("non-integral class coefficient");
        a.v[k.index] += c.get_num().get_si();
      }
    return a;
  }

  // Common degree of all components, when homogeneous.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [k, s] : comps_) {
      if (d && *d != k.degree()) return std::nullopt;
      d = k.degree();
    }
    return d;
  }

  QHElement forget_q() const {
    QHElement out(pol_, floor_);
    for (const auto& [k, s] : comps_) out.add(QHKey{k.kind, k.index, 0}, s);
    return out;
  }

  QHElement trusted() const {
    QHElement out(pol_, floor_);
    for (const auto& [k, s] : comps_) {
      S t = s.trusted();
      t.set_valid(std::nullopt);
      out.add(k, t);
    }
    return out;
  }

  bool has_pt() const {
    for (const auto& [k, s] : comps_)
      if (k.kind == QHKind::Pt) return true;
    return false;
  }

 private:
  Policy pol_;
  Rational floor_;
  std::map<QHKey, S> comps_;
};

// Small quantum product; point-class factors are not supported.
template <class Policy>
QHElement<Policy> qh_mul(const QHElement<Policy>& u, const QHElement<Policy>& v, const ParamPoint& p) {
  using S = Series<Policy>;
  if (u.has_pt() || v.has_pt()) throw std::domain_error("quantum product with a point class is not supported");
  const Policy& pol = u.policy();
  Rational floor = max_of(u.floor(), v.floor());
  const auto& table = contribution_table();
  QHElement<Policy> out(pol, floor);
  for (const auto& [k1, s1] : u.components())
    for (const auto& [k2, s2] : v.components()) {
      S s = s1 * s2;
      int q = k1.q + k2.q;
      if (k1.kind == QHKind::X) {
        out.add(QHKey{k2.kind, k2.index, q}, s);
        continue;
      }
      if (k2.kind == QHKind::X) {
        out.add(QHKey{k1.kind, k1.index, q}, s);
        continue;
      }
      H2Class a = H2Class::unit(k1.index), b = H2Class::unit(k2.index);
      long ab = intersect(a, b);
      if (ab != 0) out.add(QHKey{QHKind::Pt, 0, q}, s, Rational(ab));
      for (const auto& A : table.exceptional) {
        long m = intersect(a, A) * intersect(b, A);
        if (m != 0) out.add_class(A, q - 1, s.shifted(pol.lift(-area(A), p)), Rational(m));
      }
      for (const auto& A : table.conic) {
        long m = intersect(a, A) * intersect(b, A);
        if (m != 0) out.add(QHKey{QHKind::X, 0, q - 2}, s.shifted(pol.lift(-area(A), p)), Rational(m));
      }
    }
  return out;
}

template <class Policy>
bool qh_equal(const QHElement<Policy>& u, const QHElement<Policy>& v, bool forget_q) {
  QHElement<Policy> d = forget_q ? (u - v).forget_q() : u - v;
  return d.is_zero();
}

inline QHElement<RationalExponents> specialize(const QHElement<FormExponents>& u, const ParamPoint& p,
                                               const Rational& floor) {
  QHElement<RationalExponents> out(RationalExponents{}, floor);
  for (const auto& [k, s] : u.components()) out.add(k, specialize(s, p, floor));
  return out;
}

std::string key_label(const QHKey& k);

template <class Policy>
std::string to_string(const QHElement<Policy>& u) {
  std::string out;
  for (const auto& [k, s] : u.components()) {
    if (!out.empty()) out += "\n";
    out += key_label(k) + ": " + to_string(s);
  }
  return out.empty() ? "0" : out;
}

using QHRational = QHElement<RationalExponents>;

struct RingRelationReport {
  int id = 0;
  std::string statement;
  std::string reading;  // how the printed text was read
  bool zero = false;
  QHRational diff{RationalExponents{}, Rational(0)};
  std::string literal_note;
  std::optional<QHRational> literal_diff;
};

// Relation number id in 1..10 of the presentation of the small quantum ring on the
// MA edge, with distinct indices (i, j, k, l); q is forgotten before comparing.
RingRelationReport check_ring_relation(int id, std::array<int, 4> ijkl, const ParamPoint& p,
                                       const Rational& floor);

}  // namespace torusloops
