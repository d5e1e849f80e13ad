#include "torusloops/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace torusloops {

IndexSet complement(const IndexSet& X) {
  IndexSet out;
  for (int i = 1; i <= 4; ++i)
    if (std::find(X.begin(), X.end(), i) == X.end()) out.push_back(i);
  return out;
}

std::string index_string(const IndexSet& X) {
  std::string s;
  for (int i : X) s += std::to_string(i);
  return s;
}

IndexSet parse_index_set(std::string_view s) {
  IndexSet X;
  for (char ch : s) {
    if (ch == ',' || ch == ' ') continue;
    if (ch < '1' || ch > '4') throw std::invalid_argument("bad index set: " + std::string(s));
    X.push_back(ch - '0');
  }
  std::sort(X.begin(), X.end());
  if (std::adjacent_find(X.begin(), X.end()) != X.end())
    throw std::invalid_argument("repeated index: " + std::string(s));
  return X;
}

std::vector<IndexSet> all_subsets() {
  std::vector<IndexSet> out;
  for (int m = 0; m < 16; ++m) {
    IndexSet X;
    for (int i = 0; i < 4; ++i)
      if (m & (1 << i)) X.push_back(i + 1);
    out.push_back(X);
  }
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::string z_name(int k, const IndexSet& X) {
  std::string ks = std::to_string(k);
  if (X.empty()) return ks.size() == 1 ? "z_" + ks : "z_{" + ks + "}";
  return "z_{" + ks + "," + index_string(X) + "}";
}

DelzantPolytope hirzebruch(int k) {
  using H = H2Class;
  DelzantPolytope P;
  P.facets = {{{k, 1}, ParamForm(), H::F()},
              {{-1, 0}, ParamForm(-1), H::B() + k * H::F()},
              {{k, -1}, ParamForm(k) - ParamForm::mu(), H::F()},
              {{1, 0}, ParamForm(), H::B() - k * H::F()}};
  return P;
}

namespace {

struct Tagged {
  DelzantPolytope P;
  std::vector<std::string> tags;
};

void chop(Tagged& T, const std::string& a, const std::string& b, int e) {
  std::size_t n = T.P.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& u = T.tags[i];
    const auto& v = T.tags[(i + 1) % n];
    if ((u == a && v == b) || (u == b && v == a)) {
      T.P = corner_blowup(T.P, i, ParamForm::c(e), H2Class::E(e));
      T.tags.insert(T.tags.begin() + static_cast<long>(i) + 1, "E" + std::to_string(e));
      return;
    }
  }
  throw std::invalid_argument("no corner between " + a + " and " + b);
}

std::pair<std::string, std::string> corner_sides(const std::string& corner) {
  if (corner == "BL") return {"bot", "left"};
  if (corner == "TL") return {"top", "left"};
  if (corner == "TR") return {"top", "right"};
  if (corner == "BR") return {"bot", "right"};
  throw std::invalid_argument("unknown corner " + corner);
}

}  // namespace

DelzantPolytope build_blowups(int k, const std::vector<Chain>& chains) {
  Tagged T{hirzebruch(k), {"bot", "right", "top", "left"}};
  for (const auto& ch : chains) {
    auto [h, v] = corner_sides(ch.corner);
    std::string last;
    for (std::size_t n = 0; n < ch.idx.size(); ++n) {
      if (n == 0) {
        chop(T, h, v, ch.idx[n]);
      } else {
        char mode = n - 1 < ch.modes.size() ? ch.modes[n - 1] : 'v';
        chop(T, last, mode == 'h' ? h : v, ch.idx[n]);
      }
      last = "E" + std::to_string(ch.idx[n]);
    }
  }
  return T.P;
}

namespace {

IndexSet subset_param(const std::vector<int>& params, std::size_t from, IndexSet dflt) {
  if (params.size() <= from) return dflt;
  IndexSet X(params.begin() + static_cast<long>(from), params.end());
  std::sort(X.begin(), X.end());
  for (int i : X)
    if (i < 1 || i > 4) throw std::invalid_argument("index out of range");
  if (std::adjacent_find(X.begin(), X.end()) != X.end())
    throw std::invalid_argument("repeated index");
  return X;
}

std::string sup(const std::string& base, const IndexSet& X, const IndexSet& dflt) {
  return X == dflt ? base : base + "^{" + index_string(X) + "}";
}

CatalogEntry toric_kx(const std::string& name, int k, const IndexSet& X) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  CatalogEntry e;
  e.name = name;
  e.params.push_back(k);
  e.params.insert(e.params.end(), X.begin(), X.end());
  e.polytope = build_blowups(k, {{"BL", X, ""}, {"BR", complement(X), ""}});
  e.x_name = z_name(k, X);
  std::string sub = X.empty() ? "" : "," + index_string(X);
  e.y_name = k == 0 ? (X.empty() ? "y_0" : "y_{0" + sub + "}")
                    : (X.empty() && k < 10 ? "w_" + std::to_string(k)
                                           : "w_{" + std::to_string(k) + sub + "}");
  return e;
}

}  // namespace

CatalogEntry catalog(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument(name + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (name == "T_k") {
    need(1);
    auto e = toric_kx(name, params[0], {});
    return e;
  }
  if (name == "T_0") {
    need(0);
    auto e = toric_kx(name, 0, {});
    e.params.clear();
    return e;
  }
  if (name == "T_{k,X}") {
    if (params.empty()) throw std::invalid_argument("T_{k,X} needs k");
    return toric_kx(name, params[0], subset_param(params, 1, {}));
  }
  if (name == "T_{k,4}") {
    need(1);
    auto e = toric_kx(name, params[0], {4});
    e.params.resize(1);
    return e;
  }
  if (name == "T_{0,4}") {
    need(0);
    auto e = toric_kx(name, 0, {4});
    e.params.clear();
    return e;
  }
  CatalogEntry e;
  e.name = name;
  e.params = params;
  if (name == "T_1") {
    need(0);
    e.polytope = build_blowups(1, {{"BR", {1, 3}, "v"}, {"TR", {2, 4}, "v"}});
    e.x_name = "z_1";
    e.y_name = "r_1";
  } else if (name == "T_{0,12}") {
    need(0);
    e.polytope = build_blowups(0, {{"BL", {1}, ""}, {"TL", {2}, ""}, {"TR", {3}, ""}, {"BR", {4}, ""}});
    e.x_name = "z_{0,12}";
    e.y_name = "r_{0,12}";
  } else if (name == "Z14") {
    need(0);
    e.polytope = build_blowups(1, {{"BL", {4}, ""}, {"BR", {3}, ""}, {"TR", {1, 2}, "v"}});
    e.x_name = "z_{1,4}";
    e.y_name = "s_{1,4}";
  } else if (name == "NEF14") {
    need(0);
    e.polytope = build_blowups(1, {{"BR", {3, 4}, "h"}, {"TR", {1, 2}, "v"}});
    e.x_name = "n_{1,4}";
    e.y_name = "m_{1,4}";
  } else if (name == "AUX14") {
    need(0);
    e.polytope = build_blowups(0, {{"BL", {3}, ""}, {"BR", {4}, ""}, {"TR", {1, 2}, "h"}});
    e.x_name = "x'_1";
    e.y_name = "y'_1";
    e.note = "top facet class is F-E1-E2 (forced by the class sum); needs c1+c2 < 1";
  } else if (name == "C1" || name == "C14" || name == "AB1" || name == "AB14") {
    IndexSet X = subset_param(params, 0, {4});
    if (X.empty()) throw std::invalid_argument(name + " needs a nonempty index set");
    IndexSet Xc = complement(X);
    if (name == "C1") {
      e.polytope = build_blowups(1, {{"TR", Xc, ""}, {"BR", X, ""}});
      e.x_name = "z_1";
      e.y_name = sup("c_1", X, {4});
    } else if (name == "C14") {
      e.polytope = build_blowups(1, {{"BL", X, ""}, {"TR", Xc, ""}});
      e.x_name = z_name(1, X);
      e.y_name = "c_{1," + index_string(X) + "}";
    } else if (name == "AB1") {
      e.polytope = build_blowups(0, {{"TL", Xc, ""}, {"BR", X, ""}});
      e.x_name = sup("a_1", X, {4});
      e.y_name = sup("b_1", X, {4});
    } else {
      e.polytope = build_blowups(0, {{"TL", Xc, ""}, {"BL", X, ""}});
      e.x_name = "a_{1," + index_string(X) + "}";
      e.y_name = "b_{1," + index_string(X) + "}";
    }
  } else if (name == "AUX1" || name == "AUX2") {
    if (params.size() != 1 && params.size() != 5)
      throw std::invalid_argument(name + " takes n or n,a,b,c,d");
    int n = params[0];
    if (n < 1 || n > 6) throw std::invalid_argument(name + ": n must be in 1..6");
    std::vector<int> perm = params.size() == 5 ? std::vector<int>(params.begin() + 1, params.end())
                                               : std::vector<int>{1, 2, 3, 4};
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::vector<int>{1, 2, 3, 4} || perm[0] > perm[1] || perm[2] > perm[3])
      throw std::invalid_argument(name + ": a<b, c<d must split {1,2,3,4}");
    int a = perm[0], b = perm[1], c = perm[2], d = perm[3];
    bool first = name == "AUX1";
    // the second family swaps the roles of the top corners
    std::string far = first ? "TL" : "TR";
    std::vector<Chain> ch{{first ? "TR" : "TL", {a, b}, "v"}};
    switch (n) {
      case 1: ch.push_back({"BL", {c, d}, "v"}); break;
      case 2: ch.push_back({"BL", {c}, ""}); ch.push_back({far, {d}, ""}); break;
      case 3: ch.push_back({"BL", {d}, ""}); ch.push_back({far, {c}, ""}); break;
      case 4: ch.push_back({far, {c}, ""}); ch.push_back({"BR", {d}, ""}); break;
      case 5: ch.push_back({"BL", {c}, ""}); ch.push_back({"BR", {d}, ""}); break;
      case 6: ch.push_back({"BL", {c, d}, "h"}); break;
    }
    e.polytope = build_blowups(first ? 1 : 0, ch);
    std::string p = perm == std::vector<int>{1, 2, 3, 4} ? "" : "^{" + index_string(perm) + "}";
    std::string ns = std::to_string(n);
    e.x_name = (first ? "x_" : "s_") + ns + p;
    e.y_name = (first ? "y_" : "t_") + ns + p;
  } else {
    throw std::invalid_argument("unknown catalog name: " + name);
  }
  return e;
}

std::vector<std::string> catalog_names() {
  return {"T_k",  "T_0", "T_{k,X}", "T_{k,4}", "T_{0,4}", "T_1", "T_{0,12}", "Z14", "NEF14",
          "AUX14", "C1", "C14",     "AB1",     "AB14",    "AUX1", "AUX2"};
}

std::vector<CatalogEntry> catalog_instances() {
  std::vector<CatalogEntry> out;
  for (int k = 1; k <= 3; ++k) out.push_back(catalog("T_k", {k}));
  out.push_back(catalog("T_0"));
  for (int k = 0; k <= 3; ++k)
    for (const auto& X : all_subsets()) {
      std::vector<int> p{k};
      p.insert(p.end(), X.begin(), X.end());
      out.push_back(catalog("T_{k,X}", p));
    }
  for (int k = 1; k <= 3; ++k) out.push_back(catalog("T_{k,4}", {k}));
  for (const char* n : {"T_{0,4}", "T_1", "T_{0,12}", "Z14", "NEF14", "AUX14"}) out.push_back(catalog(n));
  for (const auto& X : all_subsets()) {
    if (X.empty()) continue;
    for (const char* n : {"C1", "C14", "AB1", "AB14"}) out.push_back(catalog(n, X));
  }
  std::vector<std::vector<int>> perms{{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3},
                                      {2, 3, 1, 4}, {2, 4, 1, 3}, {3, 4, 1, 2}};
  for (const auto& pm : perms)
    for (int n = 1; n <= 6; ++n)
      for (const char* f : {"AUX1", "AUX2"}) {
        std::vector<int> p{n};
        p.insert(p.end(), pm.begin(), pm.end());
        out.push_back(catalog(f, p));
      }
  return out;
}

}  // namespace torusloops
