#include "torusloops/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace torusloops {

LoopExpr::LoopExpr(const std::string& sym, long coef) {
  if (coef != 0) terms[sym] = coef;
}

LoopExpr& LoopExpr::operator+=(const LoopExpr& o) {
  for (const auto& [s, c] : o.terms) {
    Integer& x = terms[s];
    x += c;
    if (x == 0) terms.erase(s);
  }
  return *this;
}

LoopExpr& LoopExpr::operator-=(const LoopExpr& o) {
  LoopExpr n = o;
  n *= -1;
  return *this += n;
}

LoopExpr& LoopExpr::operator*=(long k) {
  if (k == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [s, c] : terms) c *= k;
  return *this;
}

Integer LoopExpr::coef(const std::string& s) const {
  auto it = terms.find(s);
  return it == terms.end() ? Integer(0) : it->second;
}

std::string to_string(const LoopExpr& e) {
  std::string out;
  for (const auto& [s, c] : e.terms) {
    Integer m = abs(c);
    std::string body = (m == 1 ? "" : m.get_str() + "*") + s;
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

Side polytope_side(const std::string& name, std::vector<int> params, int axis, Mat2 M) {
  Side s;
  s.polytope = name;
  s.params = std::move(params);
  s.axis = axis;
  s.M = M;
  return s;
}

Side named_side(int k, const IndexSet& X) {
  Side s;
  s.named = NamedAction{k, X, 1};
  return s;
}

LoopExpr subcircle_name(const Side& s) {
  if (s.named) return LoopExpr(z_name(s.named->k, s.named->X), s.named->sign);
  CatalogEntry e = catalog(s.polytope, s.params);
  long r0 = s.axis == 0 ? s.M.a : s.M.c;
  long r1 = s.axis == 0 ? s.M.b : s.M.d;
  if (std::gcd(r0, r1) != 1) throw std::invalid_argument("projection direction not primitive");
  return r0 * LoopExpr(e.x_name) + r1 * LoopExpr(e.y_name);
}

KarshonGraph side_graph(const Side& s, const ParamPoint& p) {
  if (s.named) {
    KarshonGraph G = named_graph(s.named->k, s.named->X);
    return s.named->sign < 0 ? flip(G, p) : normalize(G, p);
  }
  CatalogEntry e = catalog(s.polytope, s.params);
  DelzantPolytope Q = gl2_transform(e.polytope, s.M);
  return project(Q, s.axis == 0 ? Vec2{1, 0} : Vec2{0, 1}, p);
}

std::string describe(const Side& s) {
  if (s.named) return "graph " + s.named->name();
  std::string par;
  for (int x : s.params) par += (par.empty() ? "" : ",") + std::to_string(x);
  std::string m = s.M == Mat2{} ? "" :
      " after [[" + std::to_string(s.M.a) + "," + std::to_string(s.M.b) + "],[" +
      std::to_string(s.M.c) + "," + std::to_string(s.M.d) + "]]";
  return s.polytope + (par.empty() ? "" : "(" + par + ")") + m + (s.axis == 0 ? " along x" : " along y");
}

RelationCertificate certificate(const std::string& id, const Evidence& ev) {
  RelationCertificate c;
  c.id = id;
  c.lhs = subcircle_name(ev.a);
  c.rhs = subcircle_name(ev.b);
  if (ev.expect == GraphRelation::FlipEqual) c.rhs *= -1;
  c.evidence.push_back(ev);
  return c;
}

VerifyResult verify_relation(const RelationCertificate& cert, const ParamPoint& p) {
  VerifyResult r;
  LoopExpr implied;
  try {
    for (const auto& ev : cert.evidence) {
      for (const Side* s : {&ev.a, &ev.b}) {
        if (s->named) continue;
        auto chk = check_delzant(catalog(s->polytope, s->params).polytope, p);
        if (!chk.ok) {
          r.detail = describe(*s) + ": invalid polytope: " + chk.message;
          return r;
        }
      }
      KarshonGraph ga = side_graph(ev.a, p), gb = side_graph(ev.b, p);
      GraphRelation got = graphs_equal(ga, gb, p);
      if (got != ev.expect) {
        KarshonGraph target = ev.expect == GraphRelation::FlipEqual ? flip(gb, p) : gb;
        r.detail = describe(ev.a) + " vs " + describe(ev.b) + ": " + to_string(got) +
                   "; first difference: " + graph_diff(ga, target, p);
        return r;
      }
      LoopExpr rel = subcircle_name(ev.a);
      LoopExpr rb = subcircle_name(ev.b);
      if (ev.expect == GraphRelation::FlipEqual) rb *= -1;
      implied += rel - rb;
    }
  } catch (const std::exception& ex) {
    r.detail = ex.what();
    return r;
  }
  if (!(implied == cert.lhs - cert.rhs) && !(implied == cert.rhs - cert.lhs)) {
    r.detail = "evidence implies " + to_string(implied) + " = 0, not the stated relation";
    return r;
  }
  r.ok = true;
  r.detail = "graphs coincide";
  return r;
}

namespace {

const Mat2 I2{};
Mat2 mat(long a, long b, long c, long d) { return Mat2{a, b, c, d}; }

std::vector<int> kx(int k, const IndexSet& X) {
  std::vector<int> p{k};
  p.insert(p.end(), X.begin(), X.end());
  return p;
}

const std::vector<std::vector<int>>& splits() {
  static const std::vector<std::vector<int>> s{{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3},
                                               {2, 3, 1, 4}, {2, 4, 1, 3}, {3, 4, 1, 2}};
  return s;
}

std::vector<int> aux_params(int n, const std::vector<int>& perm) {
  std::vector<int> p{n};
  p.insert(p.end(), perm.begin(), perm.end());
  return p;
}

}  // namespace

std::vector<RelationCertificate> standard_certificates(int kmax) {
  std::vector<RelationCertificate> out;
  auto add = [&](const std::string& id, Side a, Side b, GraphRelation g = GraphRelation::Equal) {
    out.push_back(certificate(id, Evidence{std::move(a), std::move(b), g}));
  };
  const auto subsets = all_subsets();
  for (int k = 0; k <= kmax; ++k)
    for (const auto& X : subsets)
      add("name:" + z_name(k, X), polytope_side("T_{k,X}", kx(k, X), 0), named_side(k, X));
  for (const auto& X : subsets) {
    IndexSet Xc = complement(X);
    if (X < Xc)
      add("flip:" + z_name(0, X), named_side(0, X), named_side(0, Xc), GraphRelation::FlipEqual);
  }
  for (const auto& X : subsets) {
    std::string tag = X.empty() ? "" : "," + index_string(X);
    for (int k = 1; k <= kmax; ++k)
      add("aux[" + std::to_string(k) + tag + "]", polytope_side("T_{k,X}", kx(k, X), 1),
          polytope_side("T_{k,X}", kx(0, X), 1, mat(1, 0, -k, 1)));
    for (int k = 1; k <= kmax; ++k)
      for (int j = 1; j < k; ++j)
        add("first[" + std::to_string(j) + "," + std::to_string(k) + tag + "]",
            polytope_side("T_{k,X}", kx(k, X), 1, mat(1, 0, j, -1)),
            polytope_side("T_{k,X}", kx(j, X), 1, mat(1, 0, k, -1)));
  }
  for (const auto& X : subsets) {
    if (X.empty()) continue;
    std::string tag = "[" + index_string(X) + "]";
    IndexSet Xc = complement(X);
    add("c-shear" + tag, polytope_side("C1", X, 1, mat(1, 0, 1, 1)),
        polytope_side("C14", X, 1, mat(1, 0, 1, 1)));
    add("ab-c" + tag, polytope_side("AB1", X, 1, mat(1, 0, -1, 1)), polytope_side("C1", X, 1));
    add("ab-c14" + tag, polytope_side("AB14", X, 1, mat(1, 0, -1, 1)), polytope_side("C14", X, 1));
    add("b-b14" + tag, polytope_side("AB1", X, 1), polytope_side("AB14", X, 1));
    add("a-name" + tag, polytope_side("AB1", X, 0), named_side(0, Xc));
    add("a14-name" + tag, polytope_side("AB14", X, 0), named_side(0, {1, 2, 3, 4}));
    add("c-name" + tag, polytope_side("C1", X, 0), named_side(1, {}));
    add("c14-name" + tag, polytope_side("C14", X, 0), named_side(1, X));
  }
  for (const auto& pm : splits()) {
    std::string tag = pm == splits()[0] ? "" : "^" + index_string(pm);
    auto A = [&](int n, int axis, Mat2 M = I2) { return polytope_side("AUX1", aux_params(n, pm), axis, M); };
    auto S = [&](int n, int axis, Mat2 M = I2) { return polytope_side("AUX2", aux_params(n, pm), axis, M); };
    add("x1=x2" + tag, A(1, 0), A(2, 0));
    add("x2=x3" + tag, A(2, 0), A(3, 0));
    add("x4=x5" + tag, A(4, 0), A(5, 0));
    add("relxy1" + tag, A(3, 1, mat(1, 0, 1, 1)), A(4, 1, mat(1, 0, 1, 1)));
    add("relxy2" + tag, A(5, 1, mat(1, 0, 1, 1)), A(6, 1, mat(1, 0, 1, 1)));
    add("relxy3" + tag, A(1, 1, mat(1, 0, 2, 1)), A(6, 1, mat(1, 0, 2, 1)));
    for (int n = 1; n <= 6; ++n)
      add("rely" + std::to_string(n) + tag, S(n, 1, mat(1, 0, -1, 1)), A(n, 1));
    add("t3=t4" + tag, S(3, 1), S(4, 1));
    add("t5=t6" + tag, S(5, 1), S(6, 1));
    add("relst" + tag, S(1, 1, mat(1, 0, 1, 1)), S(6, 1, mat(1, 0, 1, 1)));
    for (int n = 1; n <= 6; ++n)
      for (const char* fam : {"AUX1", "AUX2"}) {
        Side s = polytope_side(fam, aux_params(n, pm), 0);
        auto id = identify(side_graph(s, generic_point()), generic_point(), 1);
        if (id)
          add(std::string(fam) + "-name" + std::to_string(n) + tag, s, named_side(id->k, id->X),
              id->sign < 0 ? GraphRelation::FlipEqual : GraphRelation::Equal);
      }
  }
  add("name:T_1", polytope_side("T_1", {}, 0), named_side(1, {}));
  add("name:T_{0,12}", polytope_side("T_{0,12}", {}, 0), named_side(0, {1, 2}));
  add("name:Z14", polytope_side("Z14", {}, 0), named_side(1, {4}));
  add("eqnon-nef", polytope_side("Z14", {}, 1, mat(1, 0, 1, 1)),
      polytope_side("NEF14", {}, 1, mat(1, 0, 1, 1)));
  add("s14-aux", polytope_side("Z14", {}, 1), polytope_side("AUX14", {}, 1, mat(1, 0, 1, 1)));
  return out;
}

RelationLattice::RelationLattice(const std::vector<LoopExpr>& relations,
                                 const std::vector<std::string>& named,
                                 const std::vector<std::string>& basis)
    : basis_(basis) {
  std::set<std::string> named_set(named.begin(), named.end()), basis_set(basis.begin(), basis.end());
  for (const auto& b : basis)
    if (!named_set.count(b)) throw std::invalid_argument("basis symbol not named: " + b);
  std::set<std::string> aux;
  for (const auto& r : relations)
    for (const auto& [s, c] : r.terms)
      if (!named_set.count(s)) aux.insert(s);
  cols_.assign(aux.begin(), aux.end());
  named_begin_ = cols_.size();
  for (const auto& s : named)
    if (!basis_set.count(s)) {
      cols_.push_back(s);
      named_.push_back(s);
    }
  basis_begin_ = cols_.size();
  for (const auto& s : basis) {
    cols_.push_back(s);
    named_.push_back(s);
  }
  for (std::size_t i = 0; i < cols_.size(); ++i) index_[cols_[i]] = i;

  std::vector<std::vector<Integer>> M;
  for (const auto& r : relations) M.push_back(vec(r));
  std::size_t n = cols_.size(), row = 0;
  for (std::size_t c = 0; c < n && row < M.size(); ++c) {
    for (;;) {
      std::size_t best = M.size();
      for (std::size_t r = row; r < M.size(); ++r)
        if (M[r][c] != 0 && (best == M.size() || abs(M[r][c]) < abs(M[best][c]))) best = r;
      if (best == M.size()) break;
      std::swap(M[row], M[best]);
      bool done = true;
      for (std::size_t r = row + 1; r < M.size(); ++r) {
        if (M[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), M[r][c].get_mpz_t(), M[row][c].get_mpz_t());
        for (std::size_t j = c; j < n; ++j) M[r][j] -= q * M[row][j];
        if (M[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (row < M.size() && M[row][c] != 0) {
      if (M[row][c] < 0)
        for (auto& x : M[row]) x = -x;
      for (std::size_t r = 0; r < row; ++r) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), M[r][c].get_mpz_t(), M[row][c].get_mpz_t());
        if (q != 0)
          for (std::size_t j = c; j < n; ++j) M[r][j] -= q * M[row][j];
      }
      rows_.push_back(M[row]);
      pivot_.push_back(c);
      ++row;
    }
  }
}

std::vector<Integer> RelationLattice::vec(const LoopExpr& e) const {
  std::vector<Integer> v(cols_.size());
  for (const auto& [s, c] : e.terms) {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::out_of_range("unknown symbol " + s);
    v[it->second] = c;
  }
  return v;
}

bool RelationLattice::reduce_in_place(std::vector<Integer>& v, std::size_t stop) const {
  std::size_t r = 0;
  for (std::size_t c = 0; c < stop; ++c) {
    while (r < pivot_.size() && pivot_[r] < c) ++r;
    if (v[c] == 0) continue;
    if (r == pivot_.size() || pivot_[r] != c) return false;
    if (!mpz_divisible_p(v[c].get_mpz_t(), rows_[r][c].get_mpz_t())) return false;
    Integer q = v[c] / rows_[r][c];
    for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * rows_[r][j];
  }
  return true;
}

bool RelationLattice::reduce_rational(std::vector<Rational>& v, std::size_t stop, Integer& denom) const {
  denom = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < stop; ++c) {
    while (r < pivot_.size() && pivot_[r] < c) ++r;
    if (sgn(v[c]) == 0) continue;
    if (r == pivot_.size() || pivot_[r] != c) return false;
    Rational q = v[c] / Rational(rows_[r][c]);
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * Rational(rows_[r][j]);
  }
  return true;
}

bool RelationLattice::contains(const LoopExpr& e) const {
  for (const auto& [s, c] : e.terms)
    if (!index_.count(s)) return false;
  auto v = vec(e);
  return reduce_in_place(v, v.size());
}

std::optional<Integer> RelationLattice::multiplier(const LoopExpr& e) const {
  for (const auto& [s, c] : e.terms)
    if (!index_.count(s)) return std::nullopt;
  auto iv = vec(e);
  std::vector<Rational> v(iv.begin(), iv.end());
  Integer d;
  if (!reduce_rational(v, v.size(), d)) return std::nullopt;
  return d;
}

std::optional<LoopExpr> RelationLattice::reduce(const std::string& sym) const {
  if (!index_.count(sym)) return std::nullopt;
  auto iv = vec(LoopExpr(sym));
  std::vector<Rational> v(iv.begin(), iv.end());
  Integer d;
  if (!reduce_rational(v, basis_begin_, d)) return std::nullopt;
  LoopExpr out;
  for (std::size_t j = basis_begin_; j < v.size(); ++j) {
    if (sgn(v[j]) == 0) continue;
    if (v[j].get_den() != 1) return std::nullopt;
    out.terms[cols_[j]] = v[j].get_num();
  }
  return out;
}

int RelationLattice::named_rank() const {
  int pivots = 0;
  for (std::size_t c : pivot_)
    if (c >= named_begin_) ++pivots;
  return static_cast<int>(cols_.size() - named_begin_) - pivots;
}

std::vector<std::string> basis_symbols() { return {"z_{0,12}", "z_{0,13}", "z_{0,14}", "z_1", "z_{1,4}"}; }

std::vector<std::string> named_symbols(int kmax) {
  std::vector<std::string> out;
  for (int k = 0; k <= kmax; ++k)
    for (const auto& X : all_subsets()) out.push_back(z_name(k, X));
  return out;
}

namespace {

LoopExpr z(int k, const IndexSet& X) { return LoopExpr(z_name(k, X)); }
LoopExpr sym(const std::string& s) { return LoopExpr(s); }

DerivedRelation rel(const std::string& id, LoopExpr lhs, LoopExpr rhs) {
  return DerivedRelation{id, std::move(lhs), std::move(rhs), false};
}

LoopExpr t_expr() { return z(0, {1, 2}) + z(0, {1, 3}) - z(0, {1, 4}); }

}  // namespace

std::vector<DerivedRelation> named_identities(int kmax) {
  std::vector<DerivedRelation> out;
  for (int k = 2; k <= kmax; ++k)
    for (int j = 1; j < k; ++j) {
      std::string jk = "[j=" + std::to_string(j) + ",k=" + std::to_string(k) + "]";
      out.push_back(rel("firstequation" + jk, j * z(k, {}) - sym(k < 10 ? "w_" + std::to_string(k) : ""),
                        k * z(j, {}) - sym("w_" + std::to_string(j))));
      out.push_back(rel("secondequation" + jk,
                        j * z(k, {4}) - sym("w_{" + std::to_string(k) + ",4}"),
                        k * z(j, {4}) - sym("w_{" + std::to_string(j) + ",4}")));
    }
  for (int k = 1; k <= kmax; ++k) {
    std::string ks = "[k=" + std::to_string(k) + "]";
    out.push_back(rel("auxiliary1" + ks, sym("w_" + std::to_string(k)), -k * z(0, {}) + sym("y_0")));
    out.push_back(rel("auxiliary2" + ks, sym("w_{" + std::to_string(k) + ",4}"),
                      -k * z(0, {4}) + sym("y_{0,4}")));
  }
  for (int k = 0; k <= kmax; ++k) {
    std::string ks = "[k=" + std::to_string(k) + "]";
    out.push_back(rel("result1" + ks, z(k, {}), k * z(1, {}) + (1 - k) * z(0, {})));
    for (const auto& X : all_subsets()) {
      if (X.empty() || X.size() == 4) continue;
      std::string xs = "[k=" + std::to_string(k) + ",X=" + index_string(X) + "]";
      if (X.size() == 1)
        out.push_back(rel("result2" + xs, z(k, X), k * z(1, X) + (1 - k) * z(0, X)));
      else if (X.size() == 2)
        out.push_back(rel("result3" + xs, z(k, X), k * z(1, X) + (1 - k) * z(0, X)));
      else
        out.push_back(rel("result4" + xs, z(k, X), k * z(1, X) + (k - 1) * z(0, complement(X))));
    }
    out.push_back(rel("result5" + ks, z(k, {1, 2, 3, 4}), k * z(1, {1, 2, 3, 4}) + (k - 1) * z(0, {})));
  }
  out.push_back(rel("auxiliaryrelation", z(1, {}) + sym("c_1"), z(1, {4}) + sym("c_{1,4}")));
  out.push_back(rel("relation2", z(1, {}) + z(0, {4}), z(1, {4}) + z(0, {})));
  out.push_back(rel("relation1", z(0, {}), z(0, {3}) + z(0, {4}) + z(0, {1, 2})));
  out.push_back(rel("basicz01", z(0, {1}), z(0, {1, 4}) + z(0, {1, 2}) + z(0, {3})));
  out.push_back(rel("basicz02", z(0, {2}), z(0, {1, 2}) - z(0, {1, 3}) + z(0, {3})));
  out.push_back(rel("basicz04", z(0, {4}), z(0, {1, 4}) - z(0, {1, 3}) + z(0, {3})));
  LoopExpr d = z(1, {}) - z(1, {4});
  out.push_back(rel("basicrelations:z_{0,1}", z(0, {1}), d + z(0, {1, 4})));
  out.push_back(rel("basicrelations:z_{0,2}", z(0, {2}), d - z(0, {1, 3})));
  out.push_back(rel("basicrelations:z_{0,3}", z(0, {3}), d - z(0, {1, 2})));
  out.push_back(rel("basicrelations:z_{0,4}", z(0, {4}), d - z(0, {1, 2}) - z(0, {1, 3}) + z(0, {1, 4})));
  out.push_back(rel("basicrelations:z_0", z(0, {}), 2 * d - z(0, {1, 2}) - z(0, {1, 3}) + z(0, {1, 4})));
  for (const auto& X : all_subsets())
    if (X.size() == 2 && X[0] == 1)
      out.push_back(rel("flip:" + z_name(0, X), z(0, X), -1 * z(0, complement(X))));
  out.push_back(rel("eqnon-nef", z(1, {4}) + sym("s_{1,4}"), sym("n_{1,4}") + sym("m_{1,4}")));
  out.push_back(rel("s14-aux", sym("s_{1,4}"), sym("x'_1") + sym("y'_1")));
  return out;
}

std::vector<DerivedRelation> table_identities(int kmax_check) {
  std::vector<DerivedRelation> out;
  LoopExpr z1 = z(1, {}), z14 = z(1, {4}), t = t_expr();
  auto z0ij = [&](const IndexSet& X) {
    // z_{0,ij} with 1 not in ij is minus its complement
    return X[0] == 1 ? z(0, X) : -1 * z(0, complement(X));
  };
  for (int k = 0; k <= kmax_check; ++k) {
    long kk = k;
    std::string ks = "[k=" + std::to_string(k) + "]";
    out.push_back(rel("table:z_k" + ks, z(k, {}), (2 - kk) * z1 + (kk - 1) * (2 * z14 + t)));
    LoopExpr single = (2 * kk - 1) * z14 + (1 - kk) * z1;
    out.push_back(rel("table:z_{k,1}" + ks, z(k, {1}), single + kk * t + z(0, {1, 4})));
    out.push_back(rel("table:z_{k,2}" + ks, z(k, {2}), single + kk * t - z(0, {1, 3})));
    out.push_back(rel("table:z_{k,3}" + ks, z(k, {3}), single + kk * t - z(0, {1, 2})));
    out.push_back(rel("table:z_{k,4}" + ks, z(k, {4}), single + (kk - 1) * t));
    for (const auto& X : all_subsets())
      if (X.size() == 2)
        out.push_back(rel("table:z_{k,ij}" + ks + "[ij=" + index_string(X) + "]", z(k, X),
                          2 * kk * z14 - kk * z1 + kk * t + z0ij(X)));
    LoopExpr triple = (2 * kk + 1) * z14 - (kk + 1) * z1 + kk * t;
    out.push_back(rel("table:z_{k,124}" + ks, z(k, {1, 2, 4}), triple + z(0, {1, 2})));
    out.push_back(rel("table:z_{k,134}" + ks, z(k, {1, 3, 4}), triple + z(0, {1, 3})));
    out.push_back(rel("table:z_{k,234}" + ks, z(k, {2, 3, 4}), triple - z(0, {1, 4})));
    out.push_back(rel("table:z_{k,123}" + ks, z(k, {1, 2, 3}),
                      (2 * kk + 1) * z14 - (kk + 1) * z1 + (kk + 1) * t));
    out.push_back(rel("table:z_{k,1234}" + ks, z(k, {1, 2, 3, 4}),
                      (2 * kk + 2) * z14 - (kk + 2) * z1 + (kk + 1) * t));
  }
  return out;
}

LatticeReport reduce_to_basis(const ParamPoint& p, int kmax) {
  LatticeReport rep;
  std::vector<LoopExpr> relations;
  bool ok = true;
  for (auto& c : standard_certificates(kmax)) {
    VerifyResult v = verify_relation(c, p);
    if (v.ok) relations.push_back(c.lhs - c.rhs);
    ok = ok && v.ok;
    rep.atomic.emplace_back(std::move(c), std::move(v));
  }
  RelationLattice L(relations, named_symbols(kmax), basis_symbols());
  rep.rank = L.named_rank();
  for (const auto& s : L.named()) {
    auto e = L.reduce(s);
    if (e)
      rep.basis_expressions[s] = *e;
    else
      rep.unreduced.push_back(s);
  }
  auto check = [&](DerivedRelation d) {
    auto m = L.multiplier(d.lhs - d.rhs);
    d.multiplier = m ? *m : Integer(0);
    d.certified = m.has_value();
    ok = ok && d.certified;
    rep.derived.push_back(std::move(d));
  };
  for (auto& d : named_identities(kmax)) check(std::move(d));
  for (auto& d : table_identities(std::min(kmax, 3))) check(std::move(d));
  rep.all_ok = ok && rep.unreduced.empty() && rep.rank == 5;
  return rep;
}

LatticeReport basic_relations_suite(const ParamPoint& p) {
  LatticeReport full = reduce_to_basis(p, 1);
  LatticeReport rep;
  rep.atomic = full.atomic;
  rep.rank = full.rank;
  rep.basis_expressions = full.basis_expressions;
  rep.unreduced = full.unreduced;
  bool ok = true;
  for (const auto& a : full.atomic) ok = ok && a.second.ok;
  for (const auto& d : full.derived) {
    bool basic = d.id.rfind("basicrelations:", 0) == 0 || d.id == "relation1" || d.id == "relation2" ||
                 d.id.rfind("basicz0", 0) == 0;
    if (!basic) continue;
    ok = ok && d.certified;
    rep.derived.push_back(d);
  }
  rep.all_ok = ok;
  return rep;
}

int expression_rank(const std::vector<LoopExpr>& exprs, const std::vector<std::string>& basis) {
  std::vector<std::vector<Rational>> M;
  for (const auto& e : exprs) {
    std::vector<Rational> row;
    for (const auto& b : basis) row.push_back(Rational(e.coef(b)));
    M.push_back(row);
  }
  int rank = 0;
  std::size_t n = basis.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = M.size();
    for (std::size_t r = static_cast<std::size_t>(rank); r < M.size(); ++r)
      if (sgn(M[r][c]) != 0) {
        piv = r;
        break;
      }
    if (piv == M.size()) continue;
    std::swap(M[static_cast<std::size_t>(rank)], M[piv]);
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || sgn(M[r][c]) == 0) continue;
      Rational f = M[r][c] / M[static_cast<std::size_t>(rank)][c];
      for (std::size_t j = c; j < n; ++j) M[r][j] -= f * M[static_cast<std::size_t>(rank)][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace torusloops
