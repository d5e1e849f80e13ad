#include "torusloops/report.hpp"

#include <algorithm>
#include <sstream>

namespace torusloops {

std::string to_string(Verdict v) { return v == Verdict::GapExists ? "GapExists" : "FullBasis"; }

ReproductionReport theorem_main(const Rational& mu, const Rational& floor) {
  ReproductionReport r;
  r.mu = mu;
  r.pi1_rank_source =
      "rank pi_1(Symp_h(X_5, omega)) = N_omega - 5 with N_omega = 8 on the monotone-adjacent edge "
      "(c_i = 1/2): cited constant, not recomputed";
  Enumeration en = enumerate_MA_actions(mu);
  r.action_count = static_cast<int>(en.actions.size());
  r.warnings = en.warnings;
  int kmax = 4;
  for (const auto& [a, g] : en.actions) kmax = std::max(kmax, a.k);
  LatticeReport lat = reduce_to_basis(generic_point(), kmax);
  r.lattice_ok = lat.all_ok;
  std::vector<LoopExpr> exprs;
  for (const auto& [a, g] : en.actions) {
    std::string sym = z_name(a.k, a.X);
    LoopExpr e(sym);
    if (auto it = lat.basis_expressions.find(sym); it != lat.basis_expressions.end()) e = it->second;
    else if (std::find(lat.unreduced.begin(), lat.unreduced.end(), sym) != lat.unreduced.end())
      r.lattice_ok = false;
    e *= a.sign;
    r.actions.push_back(a.name());
    r.expressions.push_back(to_string(e));
    exprs.push_back(e);
  }
  r.circle_representable_rank = expression_rank(exprs, basis_symbols());
  r.verdict = r.circle_representable_rank < r.pi1_rank_input ? Verdict::GapExists : Verdict::FullBasis;
  if (r.verdict == Verdict::FullBasis) {
    r.seidel = distinct_generators(ma_point(mu), floor);
    r.seidel_distinctness = r.seidel->all_distinct;
  }
  return r;
}

json to_json(const ReproductionReport& r) {
  json acts = json::array();
  for (std::size_t i = 0; i < r.actions.size(); ++i)
    acts.push_back({{"name", r.actions[i]}, {"basis_expression", r.expressions[i]}});
  json o = {{"mu", to_string(r.mu)},
            {"action_count", r.action_count},
            {"actions", acts},
            {"circle_representable_rank", r.circle_representable_rank},
            {"pi1_rank_input", r.pi1_rank_input},
            {"pi1_rank_source", r.pi1_rank_source},
            {"verdict", to_string(r.verdict)},
            {"seidel_distinctness", r.seidel_distinctness},
            {"lattice_ok", r.lattice_ok},
            {"warnings", r.warnings}};
  o["attachments"] = json::object();
  if (r.seidel) o["attachments"]["seidel"] = to_json(*r.seidel);
  return o;
}

std::string to_markdown(const ReproductionReport& r) {
  std::ostringstream s;
  s << "# Theorem report, mu = " << to_string(r.mu) << "\n\n";
  s << "- verdict: **" << to_string(r.verdict) << "**\n";
  s << "- circle actions (up to flip): " << r.action_count << "\n";
  s << "- rank of their span: " << r.circle_representable_rank << "\n";
  s << "- rank of pi_1: " << r.pi1_rank_input << " (" << r.pi1_rank_source << ")\n";
  s << "- relation lattice certified: " << (r.lattice_ok ? "yes" : "no") << "\n\n";
  s << "| action | basis expression |\n|---|---|\n";
  for (std::size_t i = 0; i < r.actions.size(); ++i)
    s << "| " << r.actions[i] << " | " << r.expressions[i] << " |\n";
  if (r.seidel) {
    s << "\n## Seidel elements\n\n";
    for (const auto& [n, v] : r.seidel->elements) s << "- S(" << n << ") = " << to_string(v) << "\n";
    s << "\npairwise distinct: " << r.seidel->distinct_pairs << "/" << r.seidel->pairs.size() << "\n";
  }
  if (!r.warnings.empty()) {
    s << "\n## Warnings\n\n";
    for (const auto& w : r.warnings) s << "- " << w << "\n";
  }
  return s.str();
}

}  // namespace torusloops
