#pragma once

#include "torusloops/karshon.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace torusloops {

struct LoopExpr {
  std::map<std::string, Integer> terms;

  LoopExpr() = default;
  explicit LoopExpr(const std::string& sym, long coef = 1);

  LoopExpr& operator+=(const LoopExpr& o);
  LoopExpr& operator-=(const LoopExpr& o);
  LoopExpr& operator*=(long k);
  friend LoopExpr operator+(LoopExpr a, const LoopExpr& b) { return a += b; }
  friend LoopExpr operator-(LoopExpr a, const LoopExpr& b) { return a -= b; }
  friend LoopExpr operator*(long k, LoopExpr a) { return a *= k; }
  bool operator==(const LoopExpr&) const = default;
  bool empty() const { return terms.empty(); }
  Integer coef(const std::string& s) const;
};

std::string to_string(const LoopExpr& e);

// One side of a graph coincidence: the projection along an axis of a transformed
// catalog polytope, or the generic graph of a named action.
struct Side {
  std::string polytope;
  std::vector<int> params;
  Mat2 M;
  int axis = 0;  // 0: x, 1: y
  std::optional<NamedAction> named;
};

Side polytope_side(const std::string& name, std::vector<int> params, int axis, Mat2 M = {});
Side named_side(int k, const IndexSet& X);

struct Evidence {
  Side a, b;
  GraphRelation expect = GraphRelation::Equal;
};

struct RelationCertificate {
  std::string id;
  LoopExpr lhs, rhs;
  std::vector<Evidence> evidence;
};

struct VerifyResult {
  bool ok = false;
  std::string detail;
};

LoopExpr subcircle_name(const Side& s);
KarshonGraph side_graph(const Side& s, const ParamPoint& p);
std::string describe(const Side& s);

// The relation name(a) = +-name(b) read off from one coincidence.
RelationCertificate certificate(const std::string& id, const Evidence& ev);
VerifyResult verify_relation(const RelationCertificate& cert, const ParamPoint& p);

// Families of single coincidences.
std::vector<RelationCertificate> standard_certificates(int kmax = 4);

class RelationLattice {
 public:
  // Columns are ordered: auxiliary symbols, named non-basis symbols, basis symbols.
  RelationLattice(const std::vector<LoopExpr>& relations, const std::vector<std::string>& named,
                  const std::vector<std::string>& basis);

  bool contains(const LoopExpr& e) const;
  // Smallest m > 0 with m*e in the lattice; nullopt when no multiple is.
  std::optional<Integer> multiplier(const LoopExpr& e) const;
  // Expression in the basis, valid modulo torsion.
  std::optional<LoopExpr> reduce(const std::string& sym) const;
  // rank of the image of the named symbols in the quotient
  int named_rank() const;
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<std::string>& named() const { return named_; }

 private:
  std::vector<Integer> vec(const LoopExpr& e) const;
  bool reduce_in_place(std::vector<Integer>& v, std::size_t stop) const;
  bool reduce_rational(std::vector<Rational>& v, std::size_t stop, Integer& denom) const;

  std::vector<std::string> cols_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> named_, basis_;
  std::size_t named_begin_ = 0, basis_begin_ = 0;
  std::vector<std::vector<Integer>> rows_;  // Hermite form, pivots strictly increasing
  std::vector<std::size_t> pivot_;
};

std::vector<std::string> basis_symbols();
std::vector<std::string> named_symbols(int kmax);

struct DerivedRelation {
  std::string id;
  LoopExpr lhs, rhs;
  bool certified = false;
  Integer multiplier = 0;  // smallest m with m*(lhs - rhs) certified
};

struct LatticeReport {
  std::vector<std::pair<RelationCertificate, VerifyResult>> atomic;
  std::vector<DerivedRelation> derived;
  std::map<std::string, LoopExpr> basis_expressions;
  std::vector<std::string> unreduced;
  int rank = 0;
  bool all_ok = false;
};

// Named identities of the text, each checked against the lattice of verified coincidences.
std::vector<DerivedRelation> named_identities(int kmax);
std::vector<DerivedRelation> table_identities(int kmax_check = 3);

LatticeReport reduce_to_basis(const ParamPoint& p, int kmax = 4);
LatticeReport basic_relations_suite(const ParamPoint& p);

// Rank over Q of the span of the given basis expressions.
int expression_rank(const std::vector<LoopExpr>& exprs, const std::vector<std::string>& basis);

}  // namespace torusloops
